//! Certificates as files: write, read back, verify, tamper, verify again.

use rigproof::{synthesize, Certificate, NatPoly};

fn main() {
    let np = |s: &str| s.parse::<NatPoly>().unwrap();
    let cert = synthesize(&np("1 + x + x^2"), &np("x^5"), &NatPoly::x()).unwrap();
    let path = std::env::temp_dir().join("rigproof-example-certificate.json");
    std::fs::write(&path, cert.to_json()).unwrap();

    let text = std::fs::read_to_string(&path).unwrap();
    let back = Certificate::from_json(&text).unwrap();
    assert_eq!(back.to_json(), text);
    println!(
        "{}: {} steps, {:?}",
        path.display(),
        back.len(),
        back.verify()
    );
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));

    let mut bad = back.clone();
    bad.steps[3].k += 1;
    println!("after bumping step 3: {:?}", bad.verify().failed_at());

    let truncated = &text[..text.len() / 2];
    println!(
        "truncated file: {}",
        Certificate::from_json(truncated).unwrap_err()
    );
    std::fs::remove_file(&path).ok();
}
