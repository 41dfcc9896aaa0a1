//! Published closed forms of `P_1 .. P_10`, kept as the literal expressions
//! they were printed as and parsed on demand.
//!
//! The tables write `P_9` and `P_10` as `p(z)/(1-z)(1-z^2)...` without outer
//! parentheses; the parser reads a juxtaposed product after `/` as the whole
//! denominator, which is the intended meaning.

use crate::error::Result;
use crate::ratfun::FactoredRational;

pub const P1: &str = "1/(1-z)";
pub const P2: &str = "1/((-1+z^2)(z-1))";
pub const P3: &str = "(1+z^3)/((1-z)(1-z^2)(1-z^4))";
pub const P4: &str = "(1+z^3)/((1-z)(1-z^2)^2(1-z^3))";
pub const P5: &str = concat!(
    "(z^15+z^13+3z^12+3z^11+5z^10+4z^9+6z^8+6z^7+4z^6+5z^5+3z^4+3z^3+z^2+1)",
    "/((1-z)(1-z^2)(1-z^4)(1-z^6)(1-z^8))",
);
pub const P6: &str = concat!(
    "(z^10+z^8+3z^7+4z^6+4z^5+4z^4+3z^3+z^2+1)",
    "/((1-z)(1-z^2)^2(1-z^3)(1-z^4)(1-z^5))",
);

pub const P7_NUMERATOR: &str = concat!(
    "z^35+2z^33+6z^32+10z^31+19z^30+28z^29+44z^28+61z^27+79z^26+102z^25",
    "+129z^24+156z^23+173z^22+196z^21+215z^20+230z^19+231z^18+231z^17+230z^16",
    "+215z^15+196z^14+173z^13+156z^12+129z^11+102z^10+79z^9+61z^8+44z^7+28z^6",
    "+19z^5+10z^4+6z^3+2z^2+1",
);
pub const P7_DENOMINATOR: &str = "(1-z)(1-z^2)(1-z^4)(1-z^6)(1-z^8)(1-z^10)(1-z^12)";

pub const P8_NUMERATOR: &str = concat!(
    "z^18+2z^16+6z^15+12z^14+19z^13+25z^12+31z^11+36z^10+38z^9+36z^8+31z^7",
    "+25z^6+19z^5+12z^4+6z^3+2z^2+1",
);
pub const P8_DENOMINATOR: &str = "(1-z)(1-z^2)^2(1-z^3)^2(1-z^4)(1-z^5)(1-z^7)";

pub const P9_NUMERATOR: &str = concat!(
    "z^63+3z^61+10z^60+23z^59+49z^58+93z^57+172z^56+289z^55+457z^54+701z^53",
    "+1036z^52+1477z^51+2023z^50+2720z^49+3568z^48+4573z^47+5702z^46+7013z^45",
    "+8466z^44+10043z^43+11672z^42+13400z^41+15155z^40+16880z^39+18487z^38",
    "+20013z^37+21392z^36+22539z^35+23398z^34+24013z^33+24355z^32+24355z^31",
    "+24013z^30+23398z^29+22539z^28+21392z^27+20013z^26+18487z^25+16880z^24",
    "+15155z^23+13400z^22+11672z^21+10043z^20+8466z^19+7013z^18+5702z^17",
    "+4573z^16+3568z^15+2720z^14+2023z^13+1477z^12+1036z^11+701z^10+457z^9",
    "+289z^8+172z^7+93z^6+49z^5+23z^4+10z^3+3z^2+1",
);
pub const P9_DENOMINATOR: &str = "(1-z)(1-z^2)(1-z^4)(1-z^6)(1-z^8)(1-z^10)(1-z^12)(1-z^14)(1-z^16)";

pub const P10_NUMERATOR: &str = concat!(
    "z^36+3z^34+11z^33+27z^32+58z^31+112z^30+193z^29+318z^28+485z^27+699z^26",
    "+951z^25+1245z^24+1541z^23+1842z^22+2108z^21+2321z^20+2451z^19+2506z^18",
    "+2451z^17+2321z^16+2108z^15+1842z^14+1541z^13+1245z^12+951z^11+699z^10",
    "+485z^9+318z^8+193z^7+112z^6+58z^5+27z^4+11z^3+3z^2+1",
);
pub const P10_DENOMINATOR: &str = "(1-z)(1-z^2)^2(1-z^3)(1-z^4)(1-z^5)(1-z^6)(1-z^7)(1-z^8)(1-z^9)";

/// A published `P_d` together with the text it was parsed from.
#[derive(Clone, Debug)]
pub struct GoldenFixture {
    pub d: u32,
    pub source: String,
    pub expression: FactoredRational,
}

impl GoldenFixture {
    pub fn parse(d: u32, source: impl Into<String>) -> Result<Self> {
        let source = source.into();
        let expression = source.parse()?;
        Ok(GoldenFixture { d, source, expression })
    }
}

/// Source text of the published `P_d`, `d` in `1..=10`.
pub fn source(d: u32) -> Option<String> {
    let split = |num: &str, den: &str| format!("({num})/{den}");
    Some(match d {
        1 => P1.to_string(),
        2 => P2.to_string(),
        3 => P3.to_string(),
        4 => P4.to_string(),
        5 => P5.to_string(),
        6 => P6.to_string(),
        7 => split(P7_NUMERATOR, P7_DENOMINATOR),
        8 => split(P8_NUMERATOR, P8_DENOMINATOR),
        9 => split(P9_NUMERATOR, P9_DENOMINATOR),
        10 => split(P10_NUMERATOR, P10_DENOMINATOR),
        _ => return None,
    })
}

pub fn golden(d: u32) -> Option<GoldenFixture> {
    source(d).map(|s| GoldenFixture::parse(d, s).expect("embedded fixture parses"))
}

/// Fixtures for `d = 1..=10`.
pub fn all() -> Vec<GoldenFixture> {
    (1..=10).filter_map(golden).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn coeffs(d: u32) -> Vec<i64> {
        golden(d)
            .unwrap()
            .expression
            .numerator()
            .coeffs()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn all_fixtures_parse() {
        let all = all();
        assert_eq!(all.len(), 10);
        for f in &all {
            assert!(f.expression.numerator().coeff(0) != 0.into(), "P_{} constant term", f.d);
        }
    }

    #[test]
    fn transcription_landmarks() {
        let p7 = coeffs(7);
        assert_eq!(p7.len(), 36);
        assert_eq!((p7[0], p7[17], p7[18]), (1, 231, 231));
        let p8 = coeffs(8);
        assert_eq!((p8.len(), p8[9]), (19, 38));
        let p9 = coeffs(9);
        assert_eq!((p9.len(), p9[31], p9[32]), (64, 24355, 24355));
        let p10 = coeffs(10);
        assert_eq!((p10.len(), p10[18]), (37, 2506));
        for c in [p7, p8, p9, p10] {
            let mut r = c.clone();
            r.reverse();
            assert_eq!(c, r);
        }
    }

    #[test]
    fn p2_sign_flips_cancel() {
        let p2 = golden(2).unwrap().expression;
        assert_eq!(p2.numerator().coeffs(), &[1.into()]);
        assert_eq!(p2.denominator(), &[1, 2]);
    }
}
