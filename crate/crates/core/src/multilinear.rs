//! Functorial multilinear algebra on finite-dimensional coordinate spaces.
//!
//! Conventions fixed crate-wide:
//! - `⋀^k R^n` uses the strictly increasing `k`-subsets of `{0..n}` in
//!   lexicographic order as its basis ([`IndexBasis`]); signs follow minor
//!   expansion.
//! - `V ⊗ W` uses the Kronecker ordering: `e_i ⊗ f_j` sits at `i * dim W + j`.
//! - `Hom(W, Z)` is vectorized row-major: the entry `(z, j)` of a `dim Z x dim W`
//!   matrix sits at `z * dim W + j`.

use alloc::vec::Vec;

use crate::error::{shape_err, Result};
use crate::linalg::RatMat;

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lexicographically ordered basis of `⋀^k R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexBasis {
    pub ambient_dim: usize,
    pub degree: usize,
    subsets: Vec<Vec<usize>>,
}

impl IndexBasis {
    pub fn new(ambient_dim: usize, degree: usize) -> Self {
        let mut subsets = Vec::with_capacity(binomial(ambient_dim, degree));
        let mut current = Vec::with_capacity(degree);
        fill(ambient_dim, degree, 0, &mut current, &mut subsets);
        IndexBasis {
            ambient_dim,
            degree,
            subsets,
        }
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.subsets[i]
    }

    /// Position of a strictly increasing subset.
    pub fn position(&self, subset: &[usize]) -> Option<usize> {
        self.subsets.binary_search_by(|s| s.as_slice().cmp(subset)).ok()
    }
}

fn fill(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        fill(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Matrix of `⋀^k a`: the entry at `(J, I)` is the minor of `a` on rows `J`
/// and columns `I`. `k = 0` gives `[1]`.
pub fn exterior_power_map(a: &RatMat, k: usize) -> RatMat {
    let rows = IndexBasis::new(a.rows(), k);
    let cols = IndexBasis::new(a.cols(), k);
    let mut out = RatMat::zeros(rows.len(), cols.len());
    for (r, rs) in rows.subsets().iter().enumerate() {
        for (c, cs) in cols.subsets().iter().enumerate() {
            out[(r, c)] = a.select(rs, cs).determinant();
        }
    }
    out
}

/// Kronecker product `a ⊗ b`.
pub fn tensor_product_map(a: &RatMat, b: &RatMat) -> RatMat {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = RatMat::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let s = &a[(i, j)];
            if num_traits::Zero::is_zero(s) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = s * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// Block-diagonal map on a direct sum.
pub fn direct_sum_map(blocks: &[&RatMat]) -> RatMat {
    RatMat::direct_sum(blocks)
}

/// The dual (transpose) map.
pub fn dual_map(a: &RatMat) -> RatMat {
    a.transpose()
}

/// `Hom(pre, post)`: sends `h : V -> W` to `post · h · pre`, where
/// `pre : V' -> V` and `post : W -> W'`.
pub fn hom_map(pre: &RatMat, post: &RatMat) -> RatMat {
    tensor_product_map(post, &pre.transpose())
}

/// Turns `t : V ⊗ W -> Z` into `V -> Hom(W, Z)`, with `dims = (dim V, dim W, dim Z)`.
pub fn curry_hom(dims: (usize, usize, usize), t: &RatMat) -> Result<RatMat> {
    let (p, q, r) = dims;
    if t.shape() != (r, p * q) {
        return Err(shape_err(
            "curry_hom",
            format_args!("{}x{}", r, p * q),
            format_args!("{}x{}", t.rows(), t.cols()),
        ));
    }
    let mut out = RatMat::zeros(q * r, p);
    for z in 0..r {
        for i in 0..p {
            for j in 0..q {
                out[(z * q + j, i)] = t[(z, i * q + j)].clone();
            }
        }
    }
    Ok(out)
}

/// Inverse of [`curry_hom`].
pub fn uncurry_hom(dims: (usize, usize, usize), c: &RatMat) -> Result<RatMat> {
    let (p, q, r) = dims;
    if c.shape() != (q * r, p) {
        return Err(shape_err(
            "uncurry_hom",
            format_args!("{}x{}", q * r, p),
            format_args!("{}x{}", c.rows(), c.cols()),
        ));
    }
    let mut out = RatMat::zeros(r, p * q);
    for z in 0..r {
        for i in 0..p {
            for j in 0..q {
                out[(z, i * q + j)] = c[(z * q + j, i)].clone();
            }
        }
    }
    Ok(out)
}

/// The permutation `W ⊗ (⊕ V_a) -> ⊕ (W ⊗ V_a)`.
pub fn distribute_tensor(w: usize, dims: &[usize]) -> RatMat {
    let total: usize = dims.iter().sum();
    let mut out = RatMat::zeros(w * total, w * total);
    let mut off = 0;
    let mut block = 0;
    for &d in dims {
        for l in 0..w {
            for i in 0..d {
                let src = l * total + off + i;
                let dst = block + l * d + i;
                out[(dst, src)] = num_traits::One::one();
            }
        }
        off += d;
        block += w * d;
    }
    out
}

/// The permutation `Hom(⊕ V_a, W) -> ∏ Hom(V_a, W)`.
pub fn hom_out_of_sum(dims: &[usize], w: usize) -> RatMat {
    let total: usize = dims.iter().sum();
    let mut out = RatMat::zeros(w * total, w * total);
    let mut off = 0;
    let mut block = 0;
    for &d in dims {
        for z in 0..w {
            for i in 0..d {
                out[(block + z * d + i, z * total + off + i)] = num_traits::One::one();
            }
        }
        off += d;
        block += w * d;
    }
    out
}
