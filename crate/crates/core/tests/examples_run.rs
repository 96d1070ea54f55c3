//! Every example runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
        #[test]
        fn $name() {
            $name::run().expect(stringify!($name));
        }
    };
}

example!(golden_u_series);
example!(duality_roots_of_unity);
example!(cyclotomic_coefficients);
example!(colored_jones);
example!(hecke_expansion);
example!(bailey_pipeline);
example!(bernoulli_limit);
example!(theta_products);
example!(serialization);
example!(verify_suite);
