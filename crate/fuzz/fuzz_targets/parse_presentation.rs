#![no_main]
use libfuzzer_sys::fuzz_target;
use nichols_fk::fk::{hilbert_series, QuadraticPresentation};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(pres) = QuadraticPresentation::parse(text) {
        let again = QuadraticPresentation::parse(&pres.to_text()).expect("rendered text parses");
        assert_eq!(again.relations().len(), pres.relations().len());
        if pres.n() <= 4 {
            let _ = hilbert_series(&pres, 3);
        }
    }
});
