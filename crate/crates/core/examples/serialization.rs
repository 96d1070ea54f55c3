// Exact JSON and CSV forms of series and cyclotomic values.

use torusq::io::{cyclo_to_json, series_from_csv, series_from_json, series_to_csv, series_to_json};
use torusq::knot::{eval_f_at_root, u_series, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    let p = KnotFamilyParams::new(2, 2)?;
    let u = u_series(p, 3);
    let json = series_to_json(&u);
    assert_eq!(series_from_json(&json)?, u);
    println!("{json}");
    let csv = series_to_csv(&u)?;
    assert_eq!(series_from_csv(&csv)?, u);
    print!("{csv}");
    println!("{}", cyclo_to_json(&eval_f_at_root(p, 5, false)?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
