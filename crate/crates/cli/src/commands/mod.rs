pub mod corpus;
pub mod embed;
pub mod lemma;
pub mod operator;
pub mod semigroup;
pub mod translation;

use std::path::Path;

use miso_core::matrix::{read_matrix_text, CMatrix};

use crate::InputError;

/// Read a square operator from the plain-text matrix format.
pub fn load_square_matrix(path: &Path) -> Result<CMatrix, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let m = read_matrix_text(&text)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    if m.nrows() != m.ncols() {
        return Err(InputError(format!(
            "{}: operator must be square, got {}x{}",
            path.display(),
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m)
}
