#![no_main]
use libfuzzer_sys::fuzz_target;
use nichols_fk::Permutation;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(n % 16);
    if let Ok(p) = Permutation::parse(text, n) {
        // printing and reparsing gives the same permutation
        let again = Permutation::parse(&p.to_string(), n).expect("display output parses");
        assert_eq!(p, again);
    }
});
