use symmean::cli::{run, Status};

fn main() {
    let result = run(std::env::args().skip(1));
    match result.status {
        Status::Ok | Status::Violated => println!("{}", result.output),
        _ => eprintln!("{}", result.output),
    }
    std::process::exit(result.status.exit_code());
}
