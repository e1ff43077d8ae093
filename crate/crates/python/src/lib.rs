//! Python bindings: area words, statistics, polynomial families, the
//! bounce-to-area bijection, and parking functions.

use std::collections::HashMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use narayana_core::polyomino::AreaWord;
use narayana_core::recursion::Method;
use narayana_core::{bijections, dyck, parking, polyomino, qtpoly, recursion};

fn err(e: narayana_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_word(word: &str) -> PyResult<AreaWord> {
    word.parse().map_err(err)
}

fn parse_method(method: &str) -> PyResult<Method> {
    method.parse().map_err(err)
}

fn to_dict(p: &qtpoly::QTPolynomial) -> HashMap<(u32, u32), BigInt> {
    p.terms().map(|(&k, c)| (k, c.clone())).collect()
}

/// Statistics of one area word: {m, n, area, dinv, bounce}.
#[pyfunction]
fn stats(word: &str) -> PyResult<HashMap<String, u64>> {
    let w = parse_word(word)?;
    let p = dyck::word_to_polyomino(&w).map_err(err)?;
    Ok(HashMap::from([
        ("m".into(), w.m() as u64),
        ("n".into(), w.n() as u64),
        ("area".into(), w.area()),
        ("dinv".into(), w.dinv()),
        ("bounce".into(), p.bounce()),
    ]))
}

/// All area words of the m x n box.
#[pyfunction]
fn enumerate_words(m: u32, n: u32) -> PyResult<Vec<String>> {
    Ok(polyomino::enumerate_area_words(m, n)
        .map_err(err)?
        .iter()
        .map(|w| w.to_string())
        .collect())
}

/// The bounce-to-area bijection (or its inverse) on an area word.
#[pyfunction]
#[pyo3(signature = (word, inverse = false))]
fn digamma(word: &str, inverse: bool) -> PyResult<String> {
    let p = dyck::word_to_polyomino(&parse_word(word)?).map_err(err)?;
    let image = if inverse {
        bijections::digamma_inverse(&p).map_err(err)?
    } else {
        bijections::digamma(&p).map_err(err)?
    };
    Ok(image.area_word().to_string())
}

/// Nara_{m,n}(q,t) as {(q_exp, t_exp): coefficient}, optionally refined.
#[pyfunction]
#[pyo3(signature = (m, n, rs = None, method = "enumerate"))]
fn nara(
    m: u32,
    n: u32,
    rs: Option<(u32, u32)>,
    method: &str,
) -> PyResult<HashMap<(u32, u32), BigInt>> {
    let p = match (parse_method(method)?, rs) {
        (Method::Enumeration, _) => polyomino::nara_enum(m, n, rs).map_err(err)?,
        (Method::Recursion, Some((r, s))) => recursion::nara_rs(m, n, r, s).map_err(err)?,
        (Method::Recursion, None) => recursion::nara_total(m, n, Method::Recursion).map_err(err)?,
    };
    Ok(to_dict(&p))
}

/// tildeNara_{m,n}(q,t), optionally refined by the bounce-run counts.
#[pyfunction]
#[pyo3(signature = (m, n, rs = None, method = "enumerate"))]
fn tilde_nara(
    m: u32,
    n: u32,
    rs: Option<(u32, u32)>,
    method: &str,
) -> PyResult<HashMap<(u32, u32), BigInt>> {
    let p = match (parse_method(method)?, rs) {
        (Method::Enumeration, _) => polyomino::tilde_nara_enum(m, n, rs).map_err(err)?,
        (Method::Recursion, Some((r, s))) => recursion::tilde_nara_rs(m, n, r, s).map_err(err)?,
        (Method::Recursion, None) => {
            recursion::tilde_nara_total(m, n, Method::Recursion).map_err(err)?
        }
    };
    Ok(to_dict(&p))
}

/// Para_{a,b}(q,t), optionally refined by the level-0 counts.
#[pyfunction]
#[pyo3(signature = (a, b, rs = None, method = "enumerate"))]
fn para(
    a: u32,
    b: u32,
    rs: Option<(u32, u32)>,
    method: &str,
) -> PyResult<HashMap<(u32, u32), BigInt>> {
    let p = match (parse_method(method)?, rs) {
        (Method::Enumeration, _) => parking::para_poly(a, b, rs).map_err(err)?,
        (Method::Recursion, Some((r, s))) => recursion::para_rs_rec(a, b, r, s).map_err(err)?,
        (Method::Recursion, None) => {
            recursion::total_by_recursion(recursion::Family::Para, (a, b)).map_err(err)?
        }
    };
    Ok(to_dict(&p))
}

/// The Gaussian binomial [n choose k]_q as {(q_exp, 0): coefficient}.
#[pyfunction]
fn q_binomial(n: u32, k: u32) -> PyResult<HashMap<(u32, u32), BigInt>> {
    Ok(to_dict(&qtpoly::q_binomial(n, k).map_err(err)?))
}

/// Reading word of a parking function given as [(car, level), ...].
#[pyfunction]
fn reading_word(dominoes: Vec<(u32, u32)>) -> PyResult<Vec<u32>> {
    Ok(parking::ParkingFunction::new(dominoes)
        .map_err(err)?
        .reading_word())
}

/// (area, dinv) of a parking function given as [(car, level), ...].
#[pyfunction]
fn parking_stats(dominoes: Vec<(u32, u32)>) -> PyResult<(u64, u64)> {
    let pf = parking::ParkingFunction::new(dominoes).map_err(err)?;
    Ok((pf.area(), pf.dinv()))
}

#[pymodule]
fn narayana_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_words, m)?)?;
    m.add_function(wrap_pyfunction!(digamma, m)?)?;
    m.add_function(wrap_pyfunction!(nara, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_nara, m)?)?;
    m.add_function(wrap_pyfunction!(para, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(reading_word, m)?)?;
    m.add_function(wrap_pyfunction!(parking_stats, m)?)?;
    Ok(())
}
