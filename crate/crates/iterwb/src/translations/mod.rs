pub mod reflect;
pub mod semantic;
