use clap::Parser;

fn main() {
    let cli = toric::cli::Cli::parse();
    std::process::exit(toric::cli::run(cli));
}
