//! End-to-end check that `⟨A_{2,n}(S_{λ|μ})⟩` and `P_{λ|μ}` agree: orders by
//! recursion, enumeration, coset enumeration and matrix closure, plus
//! equality of the closure with the parabolic set.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::{order_recursive, parabolic_elements_bruteforce, parabolic_member, presentation};
use crate::coxeter::generator_subset;
use crate::decomposition::{check_totals, Decomposition};
use crate::error::{Error, Result};
use crate::fp_group::{group_order, DEFAULT_MAX_COSETS};
use crate::matrix_group::{closure, phi_images, MatrixGroupClosure, DEFAULT_ELEMENT_LIMIT};
use crate::parabolic::DEFAULT_ENUMERATION_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_cosets: usize,
    pub element_limit: usize,
    /// Largest total for which all `2^{total²}` matrices are enumerated.
    pub enumeration_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_cosets: DEFAULT_MAX_COSETS,
            element_limit: DEFAULT_ELEMENT_LIMIT,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub run_presentation: bool,
    pub run_bruteforce: bool,
    pub run_image: bool,
    pub limits: Limits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            run_presentation: true,
            run_bruteforce: true,
            run_image: true,
            limits: Limits::default(),
        }
    }
}

/// JSON numbers while they fit in `u64`, decimal strings beyond.
pub(crate) fn serialize_big<S: Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.collect_str(v),
    }
}

fn serialize_big_opt<S: Serializer>(
    v: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => serialize_big(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Orders {
    #[serde(serialize_with = "serialize_big")]
    pub recursive: BigUint,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_big_opt"
    )]
    pub bruteforce: Option<BigUint>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_big_opt"
    )]
    pub presentation: Option<BigUint>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_big_opt"
    )]
    pub closure: Option<BigUint>,
}

impl Orders {
    /// All computed orders coincide.
    pub fn agree(&self) -> bool {
        [&self.bruteforce, &self.presentation, &self.closure]
            .into_iter()
            .flatten()
            .all(|o| *o == self.recursive)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "reason")]
pub enum Verdict {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub lambda: Decomposition,
    pub mu: Decomposition,
    pub orders: Orders,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_check: Option<bool>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Runs every enabled check for one pair. Resource exhaustion in any check
/// turns the verdict into `Skipped` unless a disagreement was already found.
pub fn verify_theorem(
    lambda: &Decomposition,
    mu: &Decomposition,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let total = check_totals(lambda, mu)?;
    let n = total - 1;
    let limits = options.limits;
    let mut orders = Orders {
        recursive: order_recursive(lambda, mu)?,
        ..Orders::default()
    };
    let mut skipped: Vec<String> = Vec::new();
    let mut note = |e: Error| -> Result<()> {
        if e.is_resource() {
            skipped.push(e.to_string());
            Ok(())
        } else {
            Err(e)
        }
    };

    let brute = if options.run_bruteforce || (options.run_image && total <= limits.enumeration_cap)
    {
        match parabolic_elements_bruteforce(lambda, mu, limits.enumeration_cap) {
            Ok(set) => Some(set),
            Err(e) => {
                note(e)?;
                None
            }
        }
    } else {
        None
    };
    if options.run_bruteforce {
        orders.bruteforce = brute.as_ref().map(|set| set.len().into());
    }

    if options.run_presentation {
        match group_order(&presentation(lambda, mu)?, limits.max_cosets) {
            Ok(o) => orders.presentation = Some(o),
            Err(e) => note(e)?,
        }
    }

    let gens = phi_images(&generator_subset(lambda, mu)?, n)?;
    let image: Option<MatrixGroupClosure> = match closure(total, &gens, limits.element_limit) {
        Ok(c) => Some(c),
        Err(e) => {
            note(e)?;
            None
        }
    };
    orders.closure = image.as_ref().map(MatrixGroupClosure::order);

    let image_check = match (&image, options.run_image) {
        (Some(img), true) => {
            let inside = img
                .elements()
                .map(|m| parabolic_member(&m, lambda, mu))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .all(|b| b);
            let onto = match &brute {
                Some(set) => {
                    set.len() == img.len()
                        && set
                            .iter()
                            .map(|m| img.contains(m))
                            .collect::<Result<Vec<bool>>>()?
                            .into_iter()
                            .all(|b| b)
                }
                // Closure inside P plus equal orders forces equality.
                None => img.order() == orders.recursive,
            };
            Some(inside && onto)
        }
        _ => None,
    };

    let verdict = if !orders.agree() {
        Verdict::Fail(format!("orders disagree: {}", describe(&orders)))
    } else if image_check == Some(false) {
        Verdict::Fail("closure of the generator images differs from the parabolic set".into())
    } else if !skipped.is_empty() {
        Verdict::Skipped(skipped.join("; "))
    } else {
        Verdict::Pass
    };

    Ok(VerificationReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        orders,
        image_check,
        verdict,
    })
}

fn describe(o: &Orders) -> String {
    let mut parts = vec![format!("recursive={}", o.recursive)];
    for (name, v) in [
        ("bruteforce", &o.bruteforce),
        ("presentation", &o.presentation),
        ("closure", &o.closure),
    ] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    parts.join(", ")
}
