fn main() {
    let out = homcalc::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
