//! Shared fixtures for the integration tests.
//!
//! Constants below come from a 40-digit mpmath evaluation of the closed forms
//! named next to each one. They are independent of this crate's arithmetic.
#![allow(dead_code, clippy::excessive_precision)]

use fq_scales::{Calibration, Precision, QuantizerConfig, ScaleFamily, ScaleSpec};

/// `½·log2 10`, the Log family at `x = 0.5`.
pub const LOG_F_HALF: f64 = 1.660_964_047_443_681_173_935_159_714_744_695;
/// `1 + sin(π/4)`.
pub const SINE_F_HALF: f64 = 1.707_106_781_186_547_524_400_844_362_104_849;
/// `−1 + log2 log2 10`: Log-family output at 0.5 V, 1 V/oct.
pub const LOG_QNT_HALF_VOLT: f64 = 0.732_020_845_644_619_341_139_178_8;
/// `1.2·(−1 + log2 log2 10)`: Log-family output at 0.6 V, 1.2 V/oct.
pub const LOG_QNT_BUCHLA: f64 = 0.878_425_014_773_543_209_367_014_6;
/// `440·½·log2 10`: step 6 of the Log scale over A440.
pub const LOG_STEP6_HZ: f64 = 730.824_180_875_219_716_531_470_3;
/// `1200·(log2 log2 5 − 1)`.
pub const LOG_STEP1_CENTS: f64 = 258.387_954_884_145_158_02;

/// `log2 log2(4 + n) − 1`, `n = 0..=12`.
pub const LOG_STEPS: [f64; 13] = [
    0.0,
    0.215_323_295_736_787_631_685_453_2,
    0.370_143_351_946_001_254_409_691_4,
    0.489_211_469_238_125_962_172_651_6,
    0.584_962_500_721_156_181_453_738_9,
    0.664_448_707_453_889_383_348_029_3,
    0.732_020_845_644_619_341_139_178_8,
    0.790_535_023_893_124_050_888_053_4,
    0.841_958_028_186_155_961_622_212_3,
    0.887_696_714_387_222_176_503_546,
    0.928_789_064_364_386_350_730_412_2,
    0.966_020_856_396_176_983_121_342_1,
    1.0,
];

/// `log2(1 + sin(πn/24))`, `n = 0..=12`.
pub const SINE_STEPS: [f64; 13] = [
    0.0,
    0.176_994_417_076_830_450_11,
    0.332_070_910_939_242_823_71,
    0.467_470_886_903_941_376_41,
    0.584_962_500_721_156_181_45,
    0.685_950_397_717_544_515_3,
    0.771_553_303_163_611_972_64,
    0.842_659_767_104_205_414_51,
    0.899_968_626_952_991_697_84,
    0.944_018_464_757_753_295_74,
    0.975_208_890_313_475_071_15,
    0.993_815_535_276_384_391_11,
    1.0,
];

/// `max_n |log2 f_power(a)(n/12) − n/12|` for `a = 1, 0.1, 0.01, 0.001`.
pub const POWER_ET_DEVIATION: [(f64, f64); 4] = [
    (1.0, 0.085_833_673_862_516_6),
    (0.1, 0.008_662_605_808_965_97),
    (0.01, 0.000_866_432_241_202_091),
    (0.001, 8.664_339_583_548_98e-5),
];

pub const PARAMETERS: [f64; 4] = [0.5, 1.0, 2.0, 5.0];

/// Every bundled family, with the power families at each of [`PARAMETERS`].
pub fn bundled_families() -> Vec<ScaleFamily> {
    let mut out = vec![
        ScaleFamily::EqualTemperament,
        ScaleFamily::Log,
        ScaleFamily::Sqrt,
        ScaleFamily::Sine,
    ];
    for a in PARAMETERS {
        out.push(ScaleFamily::power(a).unwrap());
        out.push(ScaleFamily::power2(a).unwrap());
    }
    out
}

pub fn config(family: ScaleFamily, v_ref: f64, precision: Precision) -> QuantizerConfig {
    QuantizerConfig::new(ScaleSpec::from(family), Calibration::new(v_ref).unwrap(), precision).unwrap()
}

/// Peak frequency of `samples` by FFT magnitude, and the bin width in Hz.
pub fn fft_peak(samples: &[i16], sample_rate: u32) -> (f64, f64) {
    use rustfft::{num_complex::Complex, FftPlanner};
    let n = samples.len();
    let mut buf: Vec<Complex<f64>> = samples.iter().map(|&s| Complex::new(s as f64, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let (bin, _) = buf[1..n / 2]
        .iter()
        .enumerate()
        .map(|(i, c)| (i + 1, c.norm()))
        .fold((0, f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best });
    let width = sample_rate as f64 / n as f64;
    (bin as f64 * width, width)
}

/// Reads a canonical 44-byte-header PCM WAV by hand:
/// `(format tag, channels, sample rate, byte rate, block align, bits, data bytes)`.
pub fn raw_wav_header(bytes: &[u8]) -> (u16, u16, u32, u32, u16, u16, u32) {
    let u16_at = |i: usize| u16::from_le_bytes([bytes[i], bytes[i + 1]]);
    let u32_at = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().unwrap());
    assert_eq!(&bytes[0..4], b"RIFF");
    assert_eq!(u32_at(4) as usize, bytes.len() - 8);
    assert_eq!(&bytes[8..12], b"WAVE");
    assert_eq!(&bytes[12..16], b"fmt ");
    assert_eq!(u32_at(16), 16);
    assert_eq!(&bytes[36..40], b"data");
    (u16_at(20), u16_at(22), u32_at(24), u32_at(28), u16_at(32), u16_at(34), u32_at(40))
}
