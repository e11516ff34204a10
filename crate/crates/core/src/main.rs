fn main() {
    let (code, output) = toric_core::io::run(std::env::args_os());
    print!("{output}");
    std::process::exit(code);
}
