fn main() {
    let out = partial_galois::cli::run(std::env::args_os());
    if out.stderr {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    std::process::exit(out.code);
}
