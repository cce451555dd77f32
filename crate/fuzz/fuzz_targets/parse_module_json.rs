#![no_main]
use libfuzzer_sys::fuzz_target;
use nichols_fk::yd::{check_braid_equation, check_yd_compatibility};
use nichols_fk::YdModule;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(module) = YdModule::from_json(text) {
        // validated modules are safe to act on, whether or not the axioms hold
        let _ = check_yd_compatibility(&module);
        if module.dim() <= 15 {
            let _ = check_braid_equation(&module);
        }
        assert_eq!(YdModule::from_json(&module.to_json()).as_ref(), Ok(&module));
    }
});
