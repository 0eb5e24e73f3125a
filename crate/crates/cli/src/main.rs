use std::io::Write;

/// Deep trees are serialized and parsed recursively.
const STACK_SIZE: usize = 1 << 30;

fn main() {
    let code = std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(|| {
            let stdout = std::io::stdout();
            let stderr = std::io::stderr();
            let mut out = std::io::BufWriter::new(stdout.lock());
            let code = hdecomp_cli::run(std::env::args_os(), &mut out, &mut stderr.lock());
            let _ = out.flush();
            code
        })
        .expect("spawn main thread")
        .join()
        .unwrap_or(101);
    std::process::exit(code);
}
