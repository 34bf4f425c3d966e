#![no_main]
use distspec::families::FamilyDescriptor;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(fd) = s.parse::<FamilyDescriptor>() {
        let printed = fd.to_string();
        assert_eq!(printed.parse::<FamilyDescriptor>().expect("own output parses"), fd);
        let g = fd.build();
        assert_eq!(g.order(), fd.order());
    }
});
