//! The small expression language used for noise functions and lifts.

use rotnum::expr::{parse, parse_with_vars};

fn main() {
    for src in [
        "sin(2*pi*w)",
        "if(w < 1/2, 1, if(w < 3/4, 0, -1))",
        "frac(5*w^2)",
        "-2^w + sin(x)*3",
        "x + (9 + frac(sqrt(2)*w))/(20*pi)*sin(2*pi*x)",
    ] {
        let e = parse(src).expect("valid");
        println!("{src:<48} => {e}");
        println!("{:<48}    at w = 0.6, x = 0.25: {}", "", e.eval_wx(0.6, 0.25).unwrap());
    }

    for bad in ["sin(", "1 +* 2", "if(w, 1, 2)", "y + 1", "min(1)"] {
        println!("{bad:<12} error: {}", parse(bad).unwrap_err());
    }

    let noise = parse_with_vars("theta^2", &["theta"]).unwrap();
    println!("custom variable: {}", noise.eval(&[("theta", 3.0)]).unwrap());
    println!("domain error:    {}", parse("sqrt(w - 1)").unwrap().eval_w(0.5).unwrap_err());
}
