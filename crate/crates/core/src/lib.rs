pub mod classify;
pub mod construct;
pub mod embedding;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod pair;
pub mod verify;
