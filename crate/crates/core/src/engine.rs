//! Shared memo tables for the expensive structure constants.
//!
//! Every operation is a pure function of its arguments; the [`Engine`]
//! only remembers answers. An uncached engine returns identical results.

use std::collections::BTreeMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{CoproductTable, GammaElement};
use crate::quiver::RectangleDiagram;
use crate::shapes::{IntSeq, Partition};
use crate::QuiverElement;

/// Bumped whenever the meaning of a cached table changes.
pub const CACHE_VERSION: u32 = 1;

/// A concurrent memo table: many readers, serialized writers. Two threads
/// may compute the same entry; the values are identical, so the last
/// write wins harmlessly.
pub(crate) struct Memo<K, V> {
    map: RwLock<FxHashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    fn new() -> Self {
        Memo {
            map: RwLock::new(FxHashMap::default()),
        }
    }

    pub(crate) fn get(&self, k: &K) -> Option<Arc<V>> {
        self.map.read().unwrap().get(k).cloned()
    }

    pub(crate) fn insert(&self, k: K, v: Arc<V>) {
        self.map.write().unwrap().insert(k, v);
    }

    fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    fn entries(&self) -> Vec<(K, Arc<V>)> {
        self.map
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    fn clear(&self) {
        self.map.write().unwrap().clear();
    }
}

/// Counters of the work actually performed (cache hits are not counted).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineStats {
    /// Tableau enumerations for products and single LR coefficients.
    pub lr_enumerations: u64,
    /// Tableau enumerations for coproduct tables.
    pub coproduct_enumerations: u64,
    /// Integer sequences rewritten by straightening.
    pub straighten_steps: u64,
    /// Quiver elements computed from a rectangle diagram.
    pub quiver_computations: u64,
}

#[derive(Default)]
struct Counters {
    lr: AtomicU64,
    coproduct: AtomicU64,
    straighten: AtomicU64,
    quiver: AtomicU64,
}

/// Memo tables for products, coproducts, straightening and quiver
/// coefficients. Safe to share between threads.
pub struct Engine {
    enabled: bool,
    pub(crate) products: Memo<(Partition, Partition), GammaElement>,
    pub(crate) coproducts: Memo<Partition, CoproductTable>,
    pub(crate) straightened: Memo<IntSeq, GammaElement>,
    pub(crate) quiver: Memo<RectangleDiagram, QuiverElement>,
    counters: Counters,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    /// An engine with all memo tables enabled.
    pub fn new() -> Self {
        Engine {
            enabled: true,
            products: Memo::new(),
            coproducts: Memo::new(),
            straightened: Memo::new(),
            quiver: Memo::new(),
            counters: Counters::default(),
        }
    }

    /// An engine that never stores anything across calls.
    pub fn uncached() -> Self {
        Engine {
            enabled: false,
            ..Self::new()
        }
    }

    /// The process-wide engine used by the free functions.
    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::new)
    }

    pub fn is_cached(&self) -> bool {
        self.enabled
    }

    pub(crate) fn lookup<K: Eq + Hash + Clone, V>(&self, memo: &Memo<K, V>, k: &K) -> Option<Arc<V>> {
        if self.enabled {
            memo.get(k)
        } else {
            None
        }
    }

    pub(crate) fn store<K: Eq + Hash + Clone, V>(&self, memo: &Memo<K, V>, k: K, v: V) -> Arc<V> {
        let v = Arc::new(v);
        if self.enabled {
            memo.insert(k, v.clone());
        }
        v
    }

    pub(crate) fn count_lr(&self) {
        self.counters.lr.fetch_add(1, Ordering::Relaxed);
    }

    pub(crate) fn count_coproduct(&self) {
        self.counters.coproduct.fetch_add(1, Ordering::Relaxed);
    }

    pub(crate) fn count_straighten(&self) {
        self.counters.straighten.fetch_add(1, Ordering::Relaxed);
    }

    pub(crate) fn count_quiver(&self) {
        self.counters.quiver.fetch_add(1, Ordering::Relaxed);
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            lr_enumerations: self.counters.lr.load(Ordering::Relaxed),
            coproduct_enumerations: self.counters.coproduct.load(Ordering::Relaxed),
            straighten_steps: self.counters.straighten.load(Ordering::Relaxed),
            quiver_computations: self.counters.quiver.load(Ordering::Relaxed),
        }
    }

    /// Number of stored entries in each table.
    pub fn table_sizes(&self) -> [usize; 4] {
        [
            self.products.len(),
            self.coproducts.len(),
            self.straightened.len(),
            self.quiver.len(),
        ]
    }

    pub fn clear(&self) {
        self.products.clear();
        self.coproducts.clear();
        self.straightened.clear();
        self.quiver.clear();
    }

    /// Copies every table into a serializable snapshot with canonical text keys.
    pub fn export(&self) -> CacheSnapshot {
        let gamma = |e: &GammaElement| -> Vec<(String, i64)> {
            e.iter().map(|(k, c)| (k.to_string(), *c)).collect()
        };
        let mut snap = CacheSnapshot {
            version: CACHE_VERSION,
            ..CacheSnapshot::default()
        };
        for ((a, b), v) in self.products.entries() {
            snap.products.insert(format!("{a}*{b}"), gamma(&v));
        }
        for (k, v) in self.coproducts.entries() {
            let rows = v
                .iter()
                .map(|(a, b, c)| (a.to_string(), b.to_string(), *c))
                .collect();
            snap.coproducts.insert(k.to_string(), rows);
        }
        for (k, v) in self.straightened.entries() {
            snap.straighten.insert(k.to_string(), gamma(&v));
        }
        for (k, v) in self.quiver.entries() {
            let rows = v
                .iter()
                .map(|(mu, c)| (mu.iter().map(|p| p.to_string()).collect(), *c))
                .collect();
            snap.quiver.insert(k.to_string(), rows);
        }
        snap
    }

    /// Loads a snapshot. Nothing is loaded unless the whole snapshot parses
    /// and carries the current version.
    pub fn import(&self, snap: &CacheSnapshot) -> Result<()> {
        if snap.version != CACHE_VERSION {
            return Err(Error::Precondition(format!(
                "cache version {} does not match {}",
                snap.version, CACHE_VERSION
            )));
        }
        let gamma = |rows: &[(String, i64)]| -> Result<GammaElement> {
            rows.iter()
                .map(|(k, c)| Ok((k.parse::<Partition>()?, *c)))
                .collect::<Result<Vec<_>>>()
                .map(|v| v.into_iter().collect())
        };
        let mut products = Vec::new();
        for (k, rows) in &snap.products {
            let (a, b) = k
                .split_once('*')
                .ok_or_else(|| Error::Precondition(format!("bad product key {k}")))?;
            products.push(((a.parse()?, b.parse()?), gamma(rows)?));
        }
        let mut coproducts = Vec::new();
        for (k, rows) in &snap.coproducts {
            let table = rows
                .iter()
                .map(|(a, b, c)| Ok((a.parse()?, b.parse()?, *c)))
                .collect::<Result<CoproductTable>>()?;
            coproducts.push((k.parse::<Partition>()?, table));
        }
        let mut straightened = Vec::new();
        for (k, rows) in &snap.straighten {
            straightened.push((k.parse::<IntSeq>()?, gamma(rows)?));
        }
        let mut quiver = Vec::new();
        for (k, rows) in &snap.quiver {
            let elem = rows
                .iter()
                .map(|(mu, c)| {
                    let mu = mu.iter().map(|p| p.parse()).collect::<Result<Vec<Partition>>>()?;
                    Ok((mu, *c))
                })
                .collect::<Result<Vec<_>>>()?;
            quiver.push((k.parse::<RectangleDiagram>()?, elem.into_iter().collect()));
        }
        for (k, v) in products {
            self.products.insert(k, Arc::new(v));
        }
        for (k, v) in coproducts {
            self.coproducts.insert(k, Arc::new(v));
        }
        for (k, v) in straightened {
            self.straightened.insert(k, Arc::new(v));
        }
        for (k, v) in quiver {
            self.quiver.insert(k, Arc::new(v));
        }
        Ok(())
    }
}

/// Serializable image of the memo tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheSnapshot {
    pub version: u32,
    /// `"lambda*mu"` to the terms of `G_lambda G_mu`.
    pub products: BTreeMap<String, Vec<(String, i64)>>,
    /// `"nu"` to the nonzero `(lambda, mu, d)` of the coproduct of `G_nu`.
    pub coproducts: BTreeMap<String, Vec<(String, String, i64)>>,
    /// `"[I]"` to the straightened terms.
    pub straighten: BTreeMap<String, Vec<(String, i64)>>,
    /// Rectangle diagram text to quiver coefficients.
    pub quiver: BTreeMap<String, Vec<(Vec<String>, i64)>>,
}
