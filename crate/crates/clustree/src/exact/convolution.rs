//! Min-sum subset convolution with capped values.
//!
//! Given `f` and `g` on the subsets of `{0, .., u-1}`, the convolution is
//!
//! ```text
//! h(Y) = min over Z subset of Y of  f(Z) + g(Y \ Z)
//! ```
//!
//! Values live in `0..=cap`: inputs above the cap are treated as "at least
//! cap" and every output is reported as `min(true value, cap)`. This is
//! the arithmetic the cluster-subset dynamic program needs, where the cap
//! is the current binary-search bound.
//!
//! Two implementations are provided. The naive one walks all `3^u`
//! subset/complement splits. The ranked one encodes each value `t < cap`
//! as the monomial `x^t`, runs zeta transforms by subset rank, multiplies
//! in the polynomial ring truncated at degree `cap`, and reads the answer
//! off the lowest surviving degree after a Möbius transform; capping makes
//! the truncation exact. Asymptotically the ranked variant trades the
//! `3^u` for `2^u` times polynomial work, which only pays off once `u` is
//! large relative to the cap; on small instances it is often the slower
//! of the two. Both produce identical output, and the tests hold them to
//! that.

use crate::cost::Cost;

/// Largest cap the ranked variant accepts; beyond this the dense
/// polynomial buffers stop being reasonable.
pub const RANKED_CAP_LIMIT: Cost = 1 << 20;

/// Direct `O(3^u)` evaluation over all subset splits.
pub fn min_sum_convolution_naive(universe_bits: u32, cap: Cost, f: &[Cost], g: &[Cost]) -> Vec<Cost> {
    let size = 1usize << universe_bits;
    assert_eq!(f.len(), size, "f must have one entry per subset");
    assert_eq!(g.len(), size, "g must have one entry per subset");

    let clamp = |x: Cost| x.min(cap);
    let mut out = vec![cap; size];
    for y in 0..size {
        let mut best = clamp(f[0]).saturating_add(clamp(g[y])).min(cap);
        let mut z = y;
        while z != 0 {
            let candidate = clamp(f[z]).saturating_add(clamp(g[y & !z])).min(cap);
            if candidate < best {
                best = candidate;
            }
            z = (z - 1) & y;
        }
        out[y] = best;
    }
    out
}

/// Ranked zeta/Möbius evaluation in the truncated polynomial ring.
pub fn min_sum_convolution_ranked(
    universe_bits: u32,
    cap: Cost,
    f: &[Cost],
    g: &[Cost],
) -> Vec<Cost> {
    let size = 1usize << universe_bits;
    assert_eq!(f.len(), size, "f must have one entry per subset");
    assert_eq!(g.len(), size, "g must have one entry per subset");
    assert!(
        cap <= RANKED_CAP_LIMIT,
        "ranked convolution cap {cap} exceeds {RANKED_CAP_LIMIT}"
    );

    let d = cap as usize;
    if d == 0 {
        return vec![0; size];
    }
    let u = universe_bits as usize;
    let ranks = u + 1;

    // Monomial encoding, rank-sliced: slice r holds f restricted to
    // subsets of popcount r, everything else zero.
    let encode = |values: &[Cost]| -> Vec<i64> {
        let mut enc = vec![0i64; ranks * size * d];
        for (s, &v) in values.iter().enumerate() {
            let v = v.min(cap);
            if v < cap {
                let r = s.count_ones() as usize;
                enc[(r * size + s) * d + v as usize] = 1;
            }
        }
        enc
    };
    // Zeta transform (sum over subsets) of every rank slice, degreewise.
    let zeta = |enc: &mut [i64]| {
        for r in 0..ranks {
            let slice = &mut enc[r * size * d..(r + 1) * size * d];
            for b in 0..u {
                let bit = 1usize << b;
                for s in 0..size {
                    if s & bit != 0 {
                        let (lo, hi) = slice.split_at_mut(s * d);
                        let src = &lo[(s ^ bit) * d..(s ^ bit) * d + d];
                        let dst = &mut hi[..d];
                        for t in 0..d {
                            dst[t] += src[t];
                        }
                    }
                }
            }
        }
    };

    let mut fz = encode(f);
    let mut gz = encode(g);
    zeta(&mut fz);
    zeta(&mut gz);

    let mut out = vec![cap; size];
    let mut h = vec![0i64; size * d];
    for r in 0..ranks {
        h.fill(0);
        for s in 0..size {
            let hs = &mut h[s * d..(s + 1) * d];
            for i in 0..=r {
                let j = r - i;
                let fs = &fz[(i * size + s) * d..(i * size + s) * d + d];
                let gs = &gz[(j * size + s) * d..(j * size + s) * d + d];
                for (a, &fa) in fs.iter().enumerate() {
                    if fa == 0 {
                        continue;
                    }
                    for b in 0..d - a {
                        hs[a + b] += fa * gs[b];
                    }
                }
            }
        }
        // Möbius transform undoes the zeta; at popcount r the surviving
        // coefficients count exact disjoint splits, so they cannot be
        // negative and the lowest nonzero degree is the convolution value.
        for b in 0..u {
            let bit = 1usize << b;
            for s in 0..size {
                if s & bit != 0 {
                    let (lo, hi) = h.split_at_mut(s * d);
                    let src = &lo[(s ^ bit) * d..(s ^ bit) * d + d];
                    let dst = &mut hi[..d];
                    for t in 0..d {
                        dst[t] -= src[t];
                    }
                }
            }
        }
        for s in 0..size {
            if s.count_ones() as usize == r {
                let hs = &h[s * d..(s + 1) * d];
                if let Some(t) = hs.iter().position(|&c| c != 0) {
                    debug_assert!(hs[t] > 0, "rank-{r} coefficient must count splits");
                    out[s] = t as Cost;
                }
            }
        }
    }
    out
}
