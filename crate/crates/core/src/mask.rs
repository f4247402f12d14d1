//! Vertex subsets as fixed-width bit masks. Bit `i` stands for the
//! variable/vertex with dense id `i`; everything in the crate that touches
//! complexes goes through these helpers, so the 63-vertex cap is enforced
//! in one place.

/// A subset of at most [`MAX_VERTICES`] vertices, bit `i` = vertex id `i`.
pub type VertexMask = u64;

/// Widest supported vertex set for bit-mask faces.
pub const MAX_VERTICES: usize = 63;

/// Mask with the low `n` bits set (the full vertex set).
pub fn full(n: usize) -> VertexMask {
    debug_assert!(n <= MAX_VERTICES);
    if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    }
}

pub fn contains(mask: VertexMask, id: usize) -> bool {
    mask >> id & 1 == 1
}

pub fn is_subset(a: VertexMask, b: VertexMask) -> bool {
    a & !b == 0
}

pub fn size(mask: VertexMask) -> usize {
    mask.count_ones() as usize
}

/// Iterate the set bits in ascending order.
pub fn bits(mask: VertexMask) -> impl Iterator<Item = usize> {
    BitIter(mask)
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let id = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(id)
        }
    }
}

/// All submasks of `mask`, including `0` and `mask` itself, in descending
/// numeric order.
pub fn submasks(mask: VertexMask) -> impl Iterator<Item = VertexMask> {
    SubmaskIter {
        mask,
        current: mask,
        done: false,
    }
}

struct SubmaskIter {
    mask: VertexMask,
    current: VertexMask,
    done: bool,
}

impl Iterator for SubmaskIter {
    type Item = VertexMask;

    fn next(&mut self) -> Option<VertexMask> {
        if self.done {
            return None;
        }
        let out = self.current;
        if self.current == 0 {
            self.done = true;
        } else {
            self.current = (self.current - 1) & self.mask;
        }
        Some(out)
    }
}

/// Renumber a submask of `ambient` into dense ids 0.. of the ambient's
/// set bits: bit `k` of the result corresponds to the `k`-th lowest set
/// bit of `ambient`.
pub fn compress(mask: VertexMask, ambient: VertexMask) -> VertexMask {
    debug_assert!(is_subset(mask, ambient));
    let mut out = 0u64;
    for (k, id) in bits(ambient).enumerate() {
        if contains(mask, id) {
            out |= 1 << k;
        }
    }
    out
}

/// Inverse of [`compress`]: re-embed a dense mask into the ambient ids.
pub fn decompress(dense: VertexMask, ambient: VertexMask) -> VertexMask {
    let mut out = 0u64;
    for (k, id) in bits(ambient).enumerate() {
        if contains(dense, k) {
            out |= 1 << id;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b101001).collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(bits(0).count(), 0);
    }

    #[test]
    fn submask_enumeration() {
        let subs: Vec<u64> = submasks(0b101).collect();
        assert_eq!(subs, vec![0b101, 0b100, 0b001, 0b000]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(submasks(full(5)).count(), 32);
    }

    #[test]
    fn compress_roundtrip() {
        let ambient = 0b110110;
        for sub in submasks(ambient) {
            let dense = compress(sub, ambient);
            assert!(dense < 1 << size(ambient));
            assert_eq!(decompress(dense, ambient), sub);
        }
        assert_eq!(compress(0b100010, ambient), 0b1001);
    }
}
