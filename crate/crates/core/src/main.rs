use std::io::Write;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("WIGNER_KIT_LOG")).init();
    let out = wigner_kit::cli::run_from(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
