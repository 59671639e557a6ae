use serde::Serialize;

use crate::algebra::q;
use crate::elliptic::WeierstrassCurve;
use crate::localsolve::SuperellipticModel;

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum ModelData {
    /// `c y^e = f(t)`.
    Superelliptic(SuperellipticModel),
    /// `y^2 = f(x)`, coefficients lowest degree first.
    Hyperelliptic { f: Vec<i64> },
    Elliptic {
        #[serde(serialize_with = "crate::serde_util::display")]
        curve: WeierstrassCurve,
    },
}

/// How a stored model is (or is not) settled.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelCheck {
    /// No `Q_p` points; recomputed by the local solubility module.
    LocallyInsoluble { p: u64 },
    /// Rank zero, taken from an external computation.
    RankZeroImported { source: &'static str },
    /// Point count from an external computation; a bounded search can confirm the known points.
    PointCountImported { points: usize, source: &'static str },
    /// Rational points not determined.
    Open,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct StoredModel {
    pub name: &'static str,
    pub model: ModelData,
    pub note: &'static str,
    pub check: ModelCheck,
}

pub const CASE6_OCTIC: [i64; 9] = [1, 12, 42, 56, 35, 0, -14, -4, 1];
pub const D15_QUARTIC: [i64; 5] = [1, 12, 14, -12, 1];
pub const D16_QUARTIC: [i64; 5] = [0, -48, -24, 0, 1];
pub const D18_OCTIC: [i64; 9] = [16, 64, 96, 64, 0, -32, -16, 0, 1];
pub const D19_DODECIC: [i64; 13] = [1, 12, 54, 128, 189, 180, 114, 36, -18, -28, -12, 0, 1];
pub const C32_SEXTIC: [i64; 7] = [1, 6, 39, 52, 39, 6, 1];
pub const CASE6_GENUS2_SEXTIC: [i64; 7] = [-64, 96, 60, 0, -15, -6, 1];

fn sup(c: i64, f: &[i64]) -> ModelData {
    ModelData::Superelliptic(SuperellipticModel::from_i64(c, 4, f).expect("valid stored model"))
}

/// Curve models behind the rational-`k` questions.
pub fn stored_models() -> Vec<StoredModel> {
    let c13 = WeierstrassCurve::new(q(1), q(0), q(1), q(-1), q(0)).expect("nonsingular");
    vec![
        StoredModel {
            name: "D15",
            model: sup(1, &D15_QUARTIC),
            note: "genus 3; known points over k = oo, 0, 864, 297/256",
            check: ModelCheck::Open,
        },
        StoredModel {
            name: "D35",
            model: sup(9, &D15_QUARTIC),
            note: "E_3 never has a rational point of order 5",
            check: ModelCheck::LocallyInsoluble { p: 3 },
        },
        StoredModel {
            name: "D16",
            model: sup(1, &D16_QUARTIC),
            note: "known points over k = 0, oo",
            check: ModelCheck::Open,
        },
        StoredModel {
            name: "D36",
            model: sup(9, &D16_QUARTIC),
            note: "known points over k = 0, oo",
            check: ModelCheck::Open,
        },
        StoredModel {
            name: "D17",
            model: sup(1, &CASE6_OCTIC),
            note: "points only at t = oo, 0, -1 (k = 0, oo), via the genus 2 quotient",
            check: ModelCheck::PointCountImported {
                points: 4,
                source: "external: Chabauty on y^2 = x^6 - 6x^5 - 15x^4 + 60x^2 + 96x - 64",
            },
        },
        StoredModel {
            name: "D37",
            model: sup(9, &CASE6_OCTIC),
            note: "E_3 never has a rational point of order 7",
            check: ModelCheck::LocallyInsoluble { p: 3 },
        },
        StoredModel {
            name: "D18",
            model: sup(1, &D18_OCTIC),
            note: "lifted points give k = 0, oo only",
            check: ModelCheck::PointCountImported {
                points: 8,
                source: "external: Chabauty on the quotient y^2 = -2x^5 + x^4 + 8x^3 - 4x^2 - 2x + 1 (8 points on the genus 3 double cover)",
            },
        },
        StoredModel {
            name: "D19",
            model: sup(1, &D19_DODECIC),
            note: "order 3 automorphism t -> -1 - 1/t",
            check: ModelCheck::Open,
        },
        StoredModel {
            name: "D39",
            model: sup(9, &D19_DODECIC),
            note: "E_3 never has a rational point of order 9",
            check: ModelCheck::LocallyInsoluble { p: 2 },
        },
        StoredModel {
            name: "C13",
            model: ModelData::Elliptic { curve: c13 },
            note: "points correspond to k = 0, oo",
            check: ModelCheck::RankZeroImported {
                source: "external: rank computation",
            },
        },
        StoredModel {
            name: "C32",
            model: ModelData::Hyperelliptic { f: C32_SEXTIC.to_vec() },
            note: "points correspond to k = 0, oo, -1, 135",
            check: ModelCheck::PointCountImported {
                points: 12,
                source: "external: quadratic Chabauty (Bianchi, Padurariu)",
            },
        },
    ]
}
