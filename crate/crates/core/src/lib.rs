pub mod error;
pub mod grassmann;
pub mod expansion;
pub mod local;
pub mod partition;
pub mod poly;
pub mod ring;
pub mod schur;
pub mod var;
pub mod weighted;
pub mod verify;
