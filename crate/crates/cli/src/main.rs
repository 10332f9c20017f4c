use std::process::ExitCode;

fn main() -> ExitCode {
    let (text, code) = lieamk_cli::run(std::env::args_os());
    if code == lieamk_cli::report::exit::INPUT && !text.trim_start().starts_with('{') {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
