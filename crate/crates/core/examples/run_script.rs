//! Parse and run a script, printing both output formats.

use vclass::script::{parse, render_human, render_machine, run, RunConfig};

const SCRIPT: &str = "
ambient P3 [x, y, z, w];
let X = scheme (x*z, y*z);
print vclass(X, twists(2, 2));
print segre(X);
";

fn main() {
    let script = parse(SCRIPT).expect("valid script");
    print!("{}", script);
    let records = run(&script, &RunConfig::default()).expect("run");
    print!("{}", render_human(&records, false));
    print!("{}", render_machine(&records, None, false));
}
