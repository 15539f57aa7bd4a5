//! Enumeration of support-closed subsets of `F_2^n`.
//!
//! Support-closed subsets containing 0 are exactly the order ideals of the
//! Boolean lattice on `[n]`, viewed as sets of masks. The enumeration adds
//! masks in increasing integer order; removing the largest element of a
//! support-closed set keeps it support-closed (a submask is never larger),
//! so every target set is generated exactly once.

use thiserror::Error;

use crate::hypercube::Subset;

pub const MAX_ENUM_DIM: usize = 7;
pub const MAX_ENUM_SIZE: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("dimension {0} exceeds the enumeration bound of {max}", max = MAX_ENUM_DIM)]
    DimensionTooLarge(usize),
    #[error("size {0} exceeds the enumeration bound of {max}", max = MAX_ENUM_SIZE)]
    SizeTooLarge(usize),
    #[error("size must be positive")]
    SizeZero,
}

/// Calls `f` on every support-closed subset of `F_2^n` of exactly the given
/// size containing 0, in a fixed deterministic order.
pub fn for_each_support_closed<F>(n: usize, size: usize, mut f: F) -> Result<(), EnumerateError>
where
    F: FnMut(&Subset),
{
    if n == 0 || n > MAX_ENUM_DIM {
        return Err(EnumerateError::DimensionTooLarge(n));
    }
    if size == 0 {
        return Err(EnumerateError::SizeZero);
    }
    if size > MAX_ENUM_SIZE {
        return Err(EnumerateError::SizeTooLarge(size));
    }
    let mut masks: Vec<u64> = vec![0];
    recurse(n, size, &mut masks, &mut f);
    Ok(())
}

fn recurse<F: FnMut(&Subset)>(n: usize, size: usize, masks: &mut Vec<u64>, f: &mut F) {
    if masks.len() == size {
        f(&Subset::from_masks(n, masks.iter().copied()).expect("masks in range"));
        return;
    }
    let start = masks.last().copied().unwrap_or(0) + 1;
    for m in start..1u64 << n {
        // addable iff every one-bit-removed submask is already present;
        // downward induction extends this to all submasks
        let mut bits = m;
        let mut addable = true;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits ^= b;
            if masks.binary_search(&(m ^ b)).is_err() {
                addable = false;
                break;
            }
        }
        if addable {
            masks.push(m);
            recurse(n, size, masks, f);
            masks.pop();
        }
    }
}

/// All support-closed subsets of the given size, in enumeration order.
pub fn support_closed_subsets(n: usize, size: usize) -> Result<Vec<Subset>, EnumerateError> {
    let mut out = Vec::new();
    for_each_support_closed(n, size, |s| out.push(s.clone()))?;
    Ok(out)
}
