use freeres::harness::*;
use freeres::polyring::Ring;
use std::time::Instant;

fn main() {
    for (c, d) in [(2u32, 2u32), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let ring = Ring::with_var_names(32003, &["x", "y", "z", "w"]).unwrap();
        let degrees = vec![d; c as usize];
        let t0 = Instant::now();
        let forms = gen_generic_forms(&ring, &degrees, 99).unwrap().unwrap();
        let parsed = ParsedInput { ring: ring.clone(), module: ModuleInput::Cyclic(forms), ann: None };
        let analysis = analyze_input(&parsed, &JobOptions::default()).unwrap();
        let profile = analysis.profile.as_ref().unwrap();
        let expect: Vec<i64> = (0..=c as usize).map(|i| d as i64 * i as i64).collect();
        println!(
            "c={c} d={d}: T={:?} (expect {:?}) commondeg_slack={:?} elapsed={:.2?}",
            profile.max_shifts,
            expect,
            analysis.bounds.iter().find(|b| b.bound.name() == "commondeg").map(|b| b.slack),
            t0.elapsed()
        );
        assert_eq!(profile.max_shifts, expect);
    }
}
