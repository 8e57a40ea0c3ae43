use freeres::harness::*;
use freeres::polyring::MonomialOrder;
use std::time::Instant;

fn main() {
    // the squared-maximal-ideal fixture end to end
    let text = "ring p=32003 vars=x,y,z order=degrevlex\nideal: x^2; x*y; x*z; y^2; y*z; z^2\n";
    let parsed = parse_input(text, None).unwrap();
    let opts = JobOptions { oracle: true, ..Default::default() };
    let report = single_report(&parsed, &opts).unwrap();
    println!("{}", emit_report(&report, "table").unwrap());
    println!("exit code: {}", report.exit_code());

    // timing: a batch at the acceptance-criterion scale
    let t0 = Instant::now();
    let params = BatchParams {
        vars: 4, max_deg: 4, gens: 5, count: 50,
        seed: 12345, characteristic: 32003, order: MonomialOrder::DegRevLex,
        options: JobOptions { oracle: true, timeout_secs: Some(10), ..Default::default() },
    };
    let report = run_batch(&params).unwrap();
    println!("50-instance batch (n=4, oracle on): {:.2?}", t0.elapsed());
    println!("summary: {:?}", report.summary);
    println!("exit code: {}", report.exit_code());
}
