fn main() {
    // dense complex LU goes through LAPACK's zgesv
    println!("cargo:rustc-link-lib=dylib=openblas");
}
