//! Driving the command-line interface from code.

fn main() {
    let dir = std::env::temp_dir().join("nomination-example");
    std::fs::create_dir_all(&dir).unwrap();
    let flat = dir.join("flat.json");
    let flat = flat.to_str().unwrap();
    let mut out = Vec::new();
    let mut err = Vec::new();
    for args in [
        vec!["nomination", "gen", "flat", "--q", "2", "--out", flat],
        vec!["nomination", "winners", flat, "--rule", "copeland:1/2"],
        vec!["nomination", "--json", "winners", flat, "--rule", "maximin"],
    ] {
        let code = nomination::cli::run(args, &mut out, &mut err);
        println!("exit {code}");
    }
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
}
