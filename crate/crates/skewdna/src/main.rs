use std::process::ExitCode;

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (`skewdna sweep | head`),
    // like any other line-oriented tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    skewdna::cli::main_entry()
}
