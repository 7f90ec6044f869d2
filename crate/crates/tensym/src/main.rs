fn main() {
    std::process::exit(tensym::run_from_env());
}
