//! Distributive laws: the tensor of a list of finite-support functions over
//! a shared carrier, and the tensor of a multiset of them.
//!
//! The multiset tensor is computed two independent ways. The primary route
//! pushes the list tensor forward along the Parikh map; the direct route
//! sums products over Parikh preimages, one candidate output multiset at a
//! time. Agreement of the two routes is one of the checked invariants, so
//! neither may be expressed in terms of the other.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::coef::Coef;
use crate::collections::{parikh, parikh_preimage, Dist, Multiset};
use crate::error::{Error, Result};
use crate::finsupp::FinSupp;
use crate::value::Value;

/// Tensor of a list of finite-support functions: assigns
/// `Π f_i(a_i)` to each list `[a_1, .., a_n]` drawn from the supports.
///
/// The support of the result is the cartesian product of the supports; the
/// empty list of functions yields the point mass on the empty list.
pub fn tensor_list(fs: &[FinSupp]) -> FinSupp {
    if fs.is_empty() {
        return crate::finsupp::eta_f(Value::list([]));
    }
    if fs.iter().any(FinSupp::is_empty) {
        return FinSupp::empty();
    }
    FinSupp::canonicalize(
        fs.iter()
            .map(|f| f.entries().iter())
            .multi_cartesian_product()
            .map(|combo| {
                let key = Value::list(combo.iter().map(|(k, _)| k.clone()));
                let coef: Coef = combo.iter().map(|(_, c)| (*c).clone()).product();
                (key, coef)
            }),
    )
}

/// Tensor of a list of distributions: sampling the components independently
/// yields a distribution over lists of outcomes.
pub fn tensor_dist_list(ds: &[Dist]) -> Dist {
    let bases: Vec<FinSupp> = ds.iter().map(|d| d.as_finsupp().clone()).collect();
    Dist::try_from(tensor_list(&bases)).expect("a product of unit masses is a unit mass")
}

/// Extracts the finite-support functions a multiset tensor operates on,
/// repeated by multiplicity in canonical order.
fn multiset_parts(ms: &Multiset) -> Result<Vec<FinSupp>> {
    ms.representative()
        .into_iter()
        .map(|k| match k {
            Value::Map(f) => Ok(f),
            other => Err(Error::Shape {
                expected: "map key".to_string(),
                found: other,
            }),
        })
        .collect()
}

/// Tensor computed from an explicit part list: the list tensor pushed
/// forward along the Parikh map, turning each outcome list into the
/// multiset of its elements.
pub fn tensor_multiset_via(parts: &[FinSupp]) -> FinSupp {
    FinSupp::canonicalize(tensor_list(parts).iter().map(|(k, c)| {
        let items = k.as_list().expect("tensor_list keys are lists");
        (Value::Map(parikh(items).into_finsupp()), c.clone())
    }))
}

/// Tensor of a multiset of finite-support functions, computed from the
/// canonical representative. The result does not depend on which
/// representative ordering is used; that invariance is itself checked by
/// the law suites.
pub fn tensor_multiset(ms: &Multiset) -> Result<FinSupp> {
    Ok(tensor_multiset_via(&multiset_parts(ms)?))
}

/// Specialization to distributions: a multiset of distributions tensors to
/// a distribution over multisets.
pub fn tensor_multiset_dist(ms: &Multiset) -> Result<Dist> {
    Dist::try_from(tensor_multiset(ms)?)
}

fn direct_candidates(parts: &[FinSupp]) -> Vec<Multiset> {
    parts
        .iter()
        .map(|f| f.entries().iter().map(|(k, _)| k))
        .multi_cartesian_product()
        .map(|tuple| parikh(&tuple.into_iter().cloned().collect::<Vec<_>>()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Coefficient of one candidate output multiset: the sum over its Parikh
/// preimages of the product of pointwise coefficients.
fn direct_coefficient(parts: &[FinSupp], candidate: &Multiset) -> Coef {
    let mut total = Coef::zero();
    for xs in parikh_preimage(candidate) {
        let term: Coef = parts.iter().zip(&xs).map(|(f, a)| f.get(a)).product();
        total += &term;
    }
    total
}

/// Multiset tensor by direct summation over Parikh preimages, used as the
/// independent cross-check of [`tensor_multiset`].
pub fn tensor_multiset_direct(ms: &Multiset) -> Result<FinSupp> {
    #[cfg(feature = "parallel")]
    {
        let parts = multiset_parts(ms)?;
        if parts.is_empty() {
            return Ok(crate::finsupp::eta_f(Value::Map(FinSupp::empty())));
        }
        use rayon::prelude::*;
        let candidates = direct_candidates(&parts);
        let entries: Vec<(Value, Coef)> = candidates
            .par_iter()
            .map(|y| {
                (
                    Value::Map(y.as_finsupp().clone()),
                    direct_coefficient(&parts, y),
                )
            })
            .collect();
        Ok(FinSupp::canonicalize(entries))
    }
    #[cfg(not(feature = "parallel"))]
    {
        tensor_multiset_direct_seq(ms)
    }
}

/// Sequential form of [`tensor_multiset_direct`]; kept callable in all
/// builds for benchmarking against the parallel path.
pub fn tensor_multiset_direct_seq(ms: &Multiset) -> Result<FinSupp> {
    let parts = multiset_parts(ms)?;
    if parts.is_empty() {
        return Ok(crate::finsupp::eta_f(Value::Map(FinSupp::empty())));
    }
    Ok(FinSupp::canonicalize(
        direct_candidates(&parts).into_iter().map(|y| {
            let coef = direct_coefficient(&parts, &y);
            (Value::Map(y.into_finsupp()), coef)
        }),
    ))
}
