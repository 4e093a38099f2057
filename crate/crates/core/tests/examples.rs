macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(enumerate_example, "enumerate.rs");
example!(counting_example, "counting.rs");
example!(bijections_example, "bijections.rs");
example!(identities_example, "identities.rs");
example!(errata_example, "errata.rs");
example!(oeis_example, "oeis.rs");

#[test]
fn examples_run() {
    enumerate_example::run_example().expect("enumerate example");
    counting_example::run_example().expect("counting example");
    bijections_example::run_example().expect("bijections example");
    identities_example::run_example().expect("identities example");
    errata_example::run_example().expect("errata example");
    oeis_example::run_example().expect("oeis example");
}
