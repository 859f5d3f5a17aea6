//! Analyze a point-set file and render it as SVG next to it.

use lcr::crossing::crossing_profile;
use lcr::fileio::{parse_pointset, Report};
use lcr::svg::emit_svg;

fn main() {
    let path = std::env::args().nth(1).expect("usage: analyze_and_render FILE");
    let ps = parse_pointset(&std::fs::read_to_string(&path).expect("file readable"))
        .expect("valid general-position point set");
    let profile = crossing_profile(&ps);
    let report = Report::new(&ps, &profile, false);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    let svg_path = format!("{path}.svg");
    std::fs::write(&svg_path, emit_svg(&ps, &profile, None)).expect("svg written");
    println!("wrote {svg_path}");
}
