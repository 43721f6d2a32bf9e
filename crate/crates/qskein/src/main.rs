fn main() {
    let (code, out, err) = qskein::cli::run(std::env::args());
    print!("{out}");
    eprint!("{err}");
    std::process::exit(code);
}
