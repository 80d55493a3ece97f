//! Persistent coefficient cache. A missing, unreadable or outdated file
//! only costs a cold start.

use std::path::Path;

use grothendieck::{CacheSnapshot, Engine};

pub fn load(engine: &Engine, path: &Path) {
    if !path.exists() {
        return;
    }
    let snap = std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|text| serde_json::from_str::<CacheSnapshot>(&text).map_err(|e| e.to_string()))
        .and_then(|snap| engine.import(&snap).map_err(|e| e.to_string()));
    if let Err(e) = snap {
        eprintln!("warning: ignoring cache {}: {e}", path.display());
        engine.clear();
    }
}

/// Writes through a temporary file so a crash never leaves half a cache.
pub fn store(engine: &Engine, path: &Path) {
    let result = serde_json::to_string(&engine.export())
        .map_err(|e| e.to_string())
        .and_then(|text| {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, text).map_err(|e| e.to_string())?;
            std::fs::rename(&tmp, path).map_err(|e| e.to_string())
        });
    if let Err(e) = result {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
}
