use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numerics::{PrecisionContext, Scalar};

pub const LOG_LO: f64 = -3.0;
pub const LOG_HI: f64 = 3.0;

/// Random source handed to entry samplers: draws respect parameter bindings.
pub struct Sampler<'a> {
    rng: ChaCha8Rng,
    ctx: PrecisionContext,
    bound: &'a [Option<f64>],
    n: Option<usize>,
}

impl<'a> Sampler<'a> {
    pub(crate) fn new(
        seed: u64,
        ctx: &PrecisionContext,
        bound: &'a [Option<f64>],
        n: Option<usize>,
    ) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            ctx: *ctx,
            bound,
            n,
        }
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn s(&self, v: f64) -> Scalar {
        self.ctx.from_f64(v)
    }

    /// Log-uniform over `[1e-3, 1e3]`.
    pub fn pos(&mut self) -> f64 {
        10f64.powf(self.rng.gen_range(LOG_LO..=LOG_HI))
    }

    /// Log-uniform over `[10^lo, 10^hi]`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        10f64.powf(self.rng.gen_range(lo..=hi))
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p.clamp(0.0, 1.0))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn bound(&self, slot: usize) -> Option<f64> {
        self.bound.get(slot).copied().flatten()
    }

    /// Bound value of `slot`, or `draw` when free.
    pub fn param_or(&mut self, slot: usize, draw: impl FnOnce(&mut Self) -> f64) -> f64 {
        match self.bound(slot) {
            Some(v) => v,
            None => draw(self),
        }
    }

    pub fn param(&mut self, slot: usize, lo: f64, hi: f64) -> f64 {
        self.param_or(slot, |s| s.uniform(lo, hi))
    }

    pub fn int_param(&mut self, slot: usize, lo: i64, hi: i64) -> f64 {
        self.param_or(slot, |s| s.rng.gen_range(lo..=hi) as f64)
    }

    /// Tuple length: the binding, or uniform in `[lo, hi]`.
    pub fn len(&mut self, lo: usize, hi: usize) -> usize {
        match self.n {
            Some(n) => n,
            None => self.rng.gen_range(lo..=hi),
        }
    }

    pub fn pos_s(&mut self) -> Scalar {
        let v = self.pos();
        self.s(v)
    }

    pub fn uniform_s(&mut self, lo: f64, hi: f64) -> Scalar {
        let v = self.uniform(lo, hi);
        self.s(v)
    }

    pub fn pos_tuple(&mut self, n: usize) -> Vec<Scalar> {
        (0..n)
            .map(|_| {
                let v = self.pos();
                self.s(v)
            })
            .collect()
    }

    /// Multiply by `1 ± rel` with a random sign.
    pub fn bump(&mut self, v: &Scalar, rel: f64) -> Scalar {
        let f = if self.coin(0.5) { 1.0 + rel } else { 1.0 - rel };
        self.ctx.val(v * f)
    }
}

/// Per-sample seed from (master seed, stream id, index), independent of scheduling.
pub fn derive_seed(master: u64, stream: u64, index: u64) -> u64 {
    let mut z = splitmix(master ^ splitmix(stream.wrapping_add(0x9E37_79B9_7F4A_7C15)));
    z = splitmix(z ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// FNV-1a, used to turn entry and witness names into stream ids.
pub fn stream_id(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}
