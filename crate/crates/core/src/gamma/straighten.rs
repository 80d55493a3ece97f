use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::engine::Engine;
use crate::gamma::GammaElement;
use crate::shapes::{IntSeq, Partition};

impl Engine {
    /// `G_I = sum_lambda delta_{I,lambda} G_lambda`.
    ///
    /// At the leftmost ascent `p < q` the rewrite
    /// `G_{..p,q..} = sum_{k=p+1}^{q} G_{..q,k..} - sum_{k=p+1}^{q-1} G_{..q-1,k..}`
    /// is applied until every sequence is weakly decreasing; a trailing run
    /// of non-positive entries is dropped first.
    pub fn straighten(&self, seq: &IntSeq) -> Arc<GammaElement> {
        let mut local = FxHashMap::default();
        self.straighten_memo(seq.without_nonpositive_tail().entries(), &mut local)
    }

    fn straighten_memo(
        &self,
        seq: &[i64],
        local: &mut FxHashMap<Vec<i64>, Arc<GammaElement>>,
    ) -> Arc<GammaElement> {
        if let Some(v) = local.get(seq) {
            return v.clone();
        }
        if seq.windows(2).all(|w| w[0] >= w[1]) {
            let lambda = Partition::from_sorted(seq.iter().map(|&v| v as u32).collect());
            return Arc::new(GammaElement::basis(lambda));
        }
        let key = IntSeq::new(seq.to_vec());
        if let Some(v) = self.lookup(&self.straightened, &key) {
            local.insert(seq.to_vec(), v.clone());
            return v;
        }
        self.count_straighten();
        let j = seq.windows(2).position(|w| w[0] < w[1]).unwrap();
        let (p, q) = (seq[j], seq[j + 1]);
        let mut out = GammaElement::zero();
        let mut child = seq.to_vec();
        for k in p + 1..=q {
            child[j] = q;
            child[j + 1] = k;
            let t = self.straighten_memo(trim(&child), local);
            out.add_scaled(&t, &1);
        }
        for k in p + 1..q {
            child[j] = q - 1;
            child[j + 1] = k;
            let t = self.straighten_memo(trim(&child), local);
            out.add_scaled(&t, &-1);
        }
        let v = self.store(&self.straightened, key, out);
        local.insert(seq.to_vec(), v.clone());
        v
    }

    /// `G_{I // lambda} = sum_{nu,mu} delta_{I,nu} d^nu_{lambda mu} G_mu`.
    pub fn skew(&self, seq: &IntSeq, lambda: &Partition) -> GammaElement {
        let mut out = GammaElement::zero();
        for (nu, delta) in self.straighten(seq).iter() {
            for (l, mu, d) in self.coproduct_table(nu).iter() {
                if l == lambda {
                    out.add_term(mu.clone(), delta * d);
                }
            }
        }
        out
    }
}

fn trim(seq: &[i64]) -> &[i64] {
    let keep = seq.iter().rposition(|&v| v > 0).map_or(0, |i| i + 1);
    &seq[..keep]
}
