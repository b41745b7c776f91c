//! Acceptance suite. Each test checks one criterion at its stated tolerance
//! and prints a single PASS/FAIL line before asserting.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use qpp::cipher::{self, sample_states};
use qpp::ent::{self, EntReport};
use qpp::keyschedule::build_dispatch;
use qpp::pads::{enumerate_s4, Perm4, PAD_SIZE};
use qpp::superposition::{build_h_hat, build_h_hat_dagger, verify_p1_diagonalization, SuperpositionSetS};
use qpp::{DomainTag, KeyMaterial, Keystream, PermutationPad, ShotRng, Statevector4};

const EXACT: f64 = 1e-12;
const SEED: u64 = 0xC0FFEE;
const MIN_SAMPLE_BYTES: usize = 64 * 1024;
const ASSETS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/assets");
const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");

fn verdict(id: u32, name: &str, ok: bool, detail: String) {
    println!("[{}] criterion {id:>2}: {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sv(a: [Complex64; 4]) -> Statevector4 {
    Statevector4::new(a).unwrap()
}

#[test]
fn c01_roundtrip_both_modes() {
    let start = Instant::now();
    let mut rng = ShotRng::new(0xA11CE);
    let mut failures = 0;
    let mut total_bytes = 0;
    for _ in 0..1000 {
        let key_len = 32 + (rng.next_u64() % 97) as usize;
        let key: Vec<u8> = (0..key_len).map(|_| rng.next_u64() as u8).collect();
        let key = KeyMaterial::new(key).unwrap();
        let len = (rng.next_u64() % 4097) as usize;
        let msg: Vec<u8> = (0..len).map(|_| rng.next_u64() as u8).collect();
        total_bytes += len;

        let wire = cipher::serialize(&cipher::encrypt(&key, &msg).unwrap());
        let sup_ok = cipher::deserialize(&wire)
            .and_then(|cs| cipher::decrypt(&key, &cs))
            .is_ok_and(|m| m == msg);
        let basis_ok = cipher::encrypt_basis(&key, &msg)
            .and_then(|ct| cipher::decrypt_basis(&key, &ct))
            .is_ok_and(|m| m == msg);
        failures += usize::from(!sup_ok) + usize::from(!basis_ok);
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        "roundtrip, 1000 random pairs, both modes, < 30 s",
        failures == 0 && elapsed < Duration::from_secs(30),
        format!("{failures} mismatches over {total_bytes} plaintext bytes in {elapsed:.2?}"),
    );
}

#[test]
fn c02_h_hat_columns() {
    let h = build_h_hat();
    let h = |v| h.apply(&Statevector4::basis(v));
    let want = [
        sv([c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)]),
        sv([c(0.5, 0.0), c(-0.5, 0.0), c(-0.5, 0.0), c(0.5, 0.0)]),
        // Matrix column 2; the printed expansion with +½ on |00> is an erratum.
        sv([c(-0.5, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(0.5, 0.0)]),
        sv([c(-0.5, 0.0), c(0.0, 0.5), c(0.0, -0.5), c(0.5, 0.0)]),
    ];
    let worst = (0..4).map(|v| h(v).max_abs_diff(&want[v])).fold(0.0, f64::max);
    let erratum = sv([c(0.5, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(0.5, 0.0)]);
    verdict(
        2,
        "Ĥ applied to each basis state",
        worst < EXACT && h(2).max_abs_diff(&erratum) > 0.5,
        format!("max deviation {worst:e}; |00> amplitude of Ĥ|10> is {}", h(2).amps()[0]),
    );
}

#[test]
fn c03_super_superposition() {
    let h00 = build_h_hat().column(0);
    let worst = enumerate_s4()
        .iter()
        .map(|p| p.to_unitary().apply(&h00).max_abs_diff(&h00))
        .fold(0.0, f64::max);
    verdict(
        3,
        "P(Ĥ|00>) = Ĥ|00> for all 24 P",
        worst < EXACT,
        format!("max deviation {worst:e}"),
    );
}

#[test]
fn c04_phase_reassignment_dichotomy() {
    let h = build_h_hat();
    let set = SuperpositionSetS::new();
    let h01 = h.column(1);

    let cycle = Perm4::new([1, 2, 3, 0]).unwrap().to_unitary();
    let cycled = cycle.apply(&h01);
    let want = sv([c(0.5, 0.0), c(0.5, 0.0), c(-0.5, 0.0), c(-0.5, 0.0)]);
    let cycle_dev = cycled.max_abs_diff(&want);
    let cycle_match = set.phase_match(&cycled, EXACT);

    let swap = Perm4::new([2, 3, 0, 1]).unwrap().to_unitary();
    let swapped = swap.apply(&h01);
    let neg_dev = swapped.max_abs_diff(&h01.with_global_phase(PI));
    let swap_match = set.phase_match(&swapped, EXACT);

    verdict(
        4,
        "4-cycle leaves S, double swap gives -Ĥ|01>",
        cycle_dev < EXACT && cycle_match.is_none() && neg_dev < EXACT && swap_match == Some(1),
        format!(
            "cycle dev {cycle_dev:e}, match {cycle_match:?}; swap vs -Ĥ|01> dev {neg_dev:e}, match {swap_match:?}"
        ),
    );
}

#[test]
fn c05_adversary_vectors() {
    let h = build_h_hat();
    let hd = build_h_hat_dagger();
    let cycle = Perm4::new([1, 2, 3, 0]).unwrap().to_unitary();
    let out = hd.apply(&cycle.apply(&h.column(1)));
    let want = [c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.5), c(-0.5, -0.5)];
    let dev = out
        .amps()
        .iter()
        .zip(want)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let e0 = Statevector4::basis(0);
    let worst_e0 = enumerate_s4()
        .iter()
        .map(|p| hd.apply(&p.to_unitary().apply(&h.column(0))).max_abs_diff(&e0))
        .fold(0.0, f64::max);
    verdict(
        5,
        "Ĥ†(P_cycle Ĥ|01>) = ¼(0,0,-2+2i,-2-2i); Ĥ†(P Ĥ|00>) = |00>",
        dev < EXACT && worst_e0 < EXACT,
        format!("vector dev {dev:e}, |00> dev over S4 {worst_e0:e}"),
    );
}

#[test]
fn c06_p1_diagonalization() {
    let d = verify_p1_diagonalization();
    let detail = match &d {
        Ok(d) => format!(
            "diag {:?}, max off-diagonal {:e}",
            d.diagonal().map(|z| format!("{:+.3}{:+.3}i", z.re, z.im)),
            d.max_off_diagonal()
        ),
        Err(e) => e.to_string(),
    };
    verdict(6, "Ĥ† P1 Ĥ = diag(1, -1, i, -i)", d.is_ok(), detail);
}

#[test]
fn c07_pad_entropy() {
    let key = KeyMaterial::from_file(format!("{ASSETS}/demo.key")).unwrap();
    let pad = PermutationPad::build(&key);
    let bits = pad.entropy_bits();
    // 56 * log2(24), from ln(24)/ln(2) rather than the library's log2 call.
    let expected = 56.0 * (24f64.ln() / 2f64.ln());
    verdict(
        7,
        "56 pad operators, 56*log2(24) bits >= 256",
        pad.len() == PAD_SIZE && (bits - expected).abs() <= 0.01 && bits >= 256.0,
        format!("{} operators, {bits:.4} bits", pad.len()),
    );
}

struct Thresholds;

impl Thresholds {
    fn check(r: &EntReport) -> Vec<String> {
        let mut bad = Vec::new();
        if r.n_bytes < MIN_SAMPLE_BYTES {
            bad.push(format!("only {} sampled bytes", r.n_bytes));
        }
        if r.entropy < 7.97 {
            bad.push(format!("entropy {:.6} < 7.97", r.entropy));
        }
        if !(180.0..=340.0).contains(&r.chi_square) {
            bad.push(format!("chi-square {:.2} outside [180, 340]", r.chi_square));
        }
        if (r.mean - 127.5).abs() > 1.5 {
            bad.push(format!("mean {:.4}", r.mean));
        }
        if r.mc_pi_error() > 0.05 {
            bad.push(format!("Monte-Carlo π {:.6}", r.mc_pi));
        }
        if r.serial_corr.abs() > 0.02 {
            bad.push(format!("serial correlation {:.6}", r.serial_corr));
        }
        bad
    }

    fn describe(r: &EntReport) -> String {
        format!(
            "n={} entropy={:.6} chi2={:.2} mean={:.4} pi={:.6} corr={:.6}",
            r.n_bytes, r.entropy, r.chi_square, r.mean, r.mc_pi, r.serial_corr
        )
    }
}

struct Asset {
    key: KeyMaterial,
    plaintext: Vec<u8>,
    shots: usize,
}

fn asset() -> Asset {
    let key = KeyMaterial::from_file(format!("{ASSETS}/demo.key")).unwrap();
    let plaintext = std::fs::read(format!("{ASSETS}/cat.jpg")).unwrap();
    assert!(plaintext.len() >= 8 * 1024);
    let blocks = 4 * plaintext.len();
    // Fewest shots per state that reach the sample-size floor.
    let shots = (4 * MIN_SAMPLE_BYTES).div_ceil(blocks);
    Asset { key, plaintext, shots }
}

#[test]
fn c08_ciphertext_randomness() {
    let start = Instant::now();
    let a = asset();
    let cs = cipher::encrypt(&a.key, &a.plaintext).unwrap();
    let sampled = ent::analyze(&sample_states(&cs, a.shots, SEED)).unwrap();
    let original = ent::analyze(&a.plaintext).unwrap();
    let randomized = ent::analyze(&qpp::keyschedule::xor_randomize(&a.plaintext, &a.key)).unwrap();
    let mut bad = Thresholds::check(&sampled);
    if original.chi_square <= randomized.chi_square {
        bad.push("original chi-square not above randomized".into());
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        bad.push(format!("took {elapsed:.2?}"));
    }
    verdict(
        8,
        "ciphertext sample meets randomness thresholds",
        bad.is_empty(),
        format!(
            "{} shots/state, {}; original chi2 {:.2} > randomized {:.2}; {elapsed:.2?}{}",
            a.shots,
            Thresholds::describe(&sampled),
            original.chi_square,
            randomized.chi_square,
            if bad.is_empty() { String::new() } else { format!("; {}", bad.join(", ")) }
        ),
    );
}

#[test]
fn c09_adversary_randomness() {
    let a = asset();
    let cs = cipher::encrypt(&a.key, &a.plaintext).unwrap();
    let sampled = ent::analyze(&sample_states(&cs.adversary_view(), a.shots, SEED)).unwrap();
    let bad = Thresholds::check(&sampled);
    verdict(
        9,
        "Ĥ†-transformed ciphertext sample meets randomness thresholds",
        bad.is_empty(),
        format!(
            "{} shots/state, {}{}",
            a.shots,
            Thresholds::describe(&sampled),
            if bad.is_empty() { String::new() } else { format!("; {}", bad.join(", ")) }
        ),
    );
}

/// Plain loops over a histogram, kept apart from the library's code path.
fn naive(data: &[u8]) -> [f64; 5] {
    let n = data.len() as f64;
    let mut hist = [0.0f64; 256];
    data.iter().for_each(|&b| hist[b as usize] += 1.0);
    let entropy = -hist.iter().filter(|&&h| h > 0.0).map(|&h| (h / n) * (h / n).log2()).sum::<f64>();
    let chi = hist.iter().map(|&h| (h - n / 256.0).powi(2) / (n / 256.0)).sum();
    let mean = data.iter().map(|&b| f64::from(b)).sum::<f64>() / n;
    let pts: Vec<(f64, f64)> = data
        .chunks_exact(6)
        .map(|g| {
            let v = |s: &[u8]| s.iter().fold(0.0, |acc, &b| acc * 256.0 + f64::from(b)) / 16_777_216.0;
            (v(&g[..3]), v(&g[3..]))
        })
        .collect();
    let pi = 4.0 * pts.iter().filter(|(x, y)| x * x + y * y < 1.0).count() as f64 / pts.len() as f64;
    let x: Vec<f64> = data.iter().map(|&b| f64::from(b)).collect();
    let s1: f64 = x.iter().sum();
    let s2: f64 = x.iter().map(|a| a * a).sum();
    let s3: f64 = (0..x.len()).map(|i| x[i] * x[(i + 1) % x.len()]).sum();
    let den = n * s2 - s1 * s1;
    [entropy, chi, mean, pi, if den == 0.0 { 0.0 } else { (n * s3 - s1 * s1) / den }]
}

#[test]
fn c10_ent_oracle() {
    let flat: Vec<u8> = (0..256 * 256).map(|i| (i % 256) as u8).collect();
    let r = ent::analyze(&flat).unwrap();
    let exact = r.entropy == 8.0 && r.chi_square == 0.0 && r.mean == 127.5;

    let mut rng = ShotRng::new(0x0E27);
    let mut worst = 0.0f64;
    for _ in 0..64 {
        let buf: Vec<u8> = (0..1024).map(|_| rng.next_u64() as u8).collect();
        let r = ent::analyze(&buf).unwrap();
        let got = [r.entropy, r.chi_square, r.mean, r.mc_pi, r.serial_corr];
        for (a, b) in got.iter().zip(naive(&buf)) {
            worst = worst.max((a - b).abs());
        }
    }
    verdict(
        10,
        "ENT exact on flat buffer, matches naive oracle",
        exact && worst < 1e-9,
        format!(
            "flat: entropy {} chi2 {} mean {}; max oracle deviation {worst:e}",
            r.entropy, r.chi_square, r.mean
        ),
    );
}

#[test]
fn c11_golden_fixtures() {
    let key = KeyMaterial::from_file(format!("{FIXTURES}/golden.key")).unwrap();
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let mut ks = Keystream::seed(&key, DomainTag::Pad);
    let first: Vec<u64> = (0..4).map(|_| ks.next_u64()).collect();
    checks.push((
        "keystream",
        first == [0x79413a7785ad1b1f, 0x8616adfbeaa597dc, 0xeaf0eff8d150233b, 0x6fcd33e0858480af],
    ));
    checks.push(("pad fingerprint", PermutationPad::build(&key).fingerprint() == 0x4632c081fb5fab0d));
    checks.push((
        "dispatch prefix",
        build_dispatch(&key, 8, PAD_SIZE) == [39, 41, 51, 28, 35, 51, 19, 29],
    ));
    let cs = cipher::encrypt(&key, b"QPP").unwrap();
    let qpps = std::fs::read(format!("{FIXTURES}/small.qpps")).unwrap();
    checks.push(("QPPS file", cipher::serialize(&cs) == qpps));
    let samples = std::fs::read(format!("{FIXTURES}/small.samples")).unwrap();
    checks.push(("sampled bits", sample_states(&cs, 8, SEED) == samples));

    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    verdict(
        11,
        "golden fixtures byte-identical",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} fixtures match", checks.len())
        } else {
            format!("mismatch: {}", failed.join(", "))
        },
    );
}
