use pyo3::prelude::*;

#[pymodule]
fn drq_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
