use std::env;
use std::fs;
use std::path::PathBuf;

fn main() {
    let dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    // The header compile test needs the target triple for cc.
    println!("cargo:rustc-env=ZETAIX_FFI_TARGET={}", env::var("TARGET").unwrap());
    println!("cargo:rustc-env=ZETAIX_FFI_HOST={}", env::var("HOST").unwrap());

    let config = cbindgen::Config::from_file(dir.join("cbindgen.toml")).expect("cbindgen.toml");
    let bindings =
        cbindgen::Builder::new().with_crate(&dir).with_config(config).generate().expect("generate C header");
    let mut text = Vec::new();
    bindings.write(&mut text);
    let header = dir.join("include").join("zetaix.h");
    // Only touch the file when it changes, so it does not retrigger builds.
    if fs::read(&header).ok().as_deref() != Some(text.as_slice()) {
        fs::create_dir_all(header.parent().unwrap()).unwrap();
        fs::write(&header, text).unwrap();
    }
}
