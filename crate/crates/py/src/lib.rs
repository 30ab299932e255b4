use pyo3::prelude::*;

#[pymodule]
fn hamcomp_py(_py: Python<'_>, _m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
