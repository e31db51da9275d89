macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(compatibility, "compatibility.rs", compatibility_example_runs);
example!(strong_classes, "strong_classes.rs", strong_classes_example_runs);
example!(weak_count, "weak_count.rs", weak_count_example_runs);
example!(closed_formulas, "closed_formulas.rs", closed_formulas_example_runs);
example!(characters, "characters.rs", characters_example_runs);
example!(scan, "scan.rs", scan_example_runs);
example!(dessins, "dessins.rs", dessins_example_runs);
