pub mod board;
pub mod cli;
pub mod fixtures;
pub mod format;
pub mod lattice;
pub mod perm;
pub mod puzzle;
pub mod render;
pub mod wallpaper;
