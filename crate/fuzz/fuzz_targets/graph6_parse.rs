#![no_main]
use distspec::graph::graph6::{parse_graph6_bytes, read_graph6_stream, write_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6_bytes(data) {
        // re-encoding is canonical and decodes to the same labelled graph
        let s = write_graph6(&g);
        let h = parse_graph6_bytes(s.as_bytes()).expect("own output parses");
        assert_eq!(g, h);
        assert_eq!(write_graph6(&h), s);
    }
    for item in read_graph6_stream(data) {
        if let Err(e) = item {
            let _ = e.offset();
        }
    }
});
