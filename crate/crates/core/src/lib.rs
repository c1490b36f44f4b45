pub mod arith;
pub mod classify;
pub mod fixtures;
pub mod gadget;
pub mod grid;
pub mod interp;
pub mod io;
pub mod planar;
pub mod signature;
pub mod tensor;
pub mod verify;
