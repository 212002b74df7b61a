pub mod e7;
pub mod exact;
pub mod f2sym;
pub mod heisenberg;
pub mod tensor_forms;
pub mod verify;
