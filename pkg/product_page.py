"""
Products Page for the iSchur Explorer
Browse the basis of S^i(n, r) and multiply two basis elements by the oracle and the formulas
"""

import streamlit as st

import config_manager
from errors import InadmissibleFormulaError, ISchurError
from schur import basis, formula_product, normalization, oracle_product


def _label(A) -> str:
    return " | ".join(" ".join(str(a) for a in row) for row in A.rows())


def _show_element(element):
    if element.is_zero():
        st.markdown("`0`")
        return
    rows = [{"matrix": _label(A), "coefficient": c.fmt()} for A, c in element.terms()]
    st.dataframe(rows, use_container_width=True)


def show():
    """Display the products page"""

    st.markdown("<h1 class='main-header'>🧮 Products in S^i(n, r)</h1>", unsafe_allow_html=True)

    caps = config_manager.get_caps()
    col1, col2 = st.columns(2)
    with col1:
        n = st.number_input("n", min_value=1, max_value=caps['max_n'], value=1)
    with col2:
        r = st.number_input("r", min_value=1, max_value=caps['max_r'], value=1)

    try:
        config_manager.check_caps(n, r, caps)
        matrices = basis(n, r, cap=caps['max_basis'])
    except ISchurError as e:
        st.error(f"❌ {e}")
        return

    st.markdown(f"**|Xi| = {len(matrices)}**")

    with st.expander("📋 Basis", expanded=False):
        rows = []
        for A in matrices:
            data = normalization(A)
            rows.append({"matrix": _label(A), "ro": str(A.ro()), "co": str(A.co()),
                         "normalization exponent": data.exponent})
        st.dataframe(rows, use_container_width=True)

    labels = [_label(A) for A in matrices]
    col1, col2 = st.columns(2)
    with col1:
        left = st.selectbox("Left factor", options=range(len(matrices)), format_func=lambda k: labels[k])
    with col2:
        right = st.selectbox("Right factor", options=range(len(matrices)), format_func=lambda k: labels[k])

    if st.button("✖️ Multiply", type="primary"):
        A, B = matrices[left], matrices[right]
        oracle = oracle_product(A, B)
        st.markdown("### Oracle")
        _show_element(oracle)

        st.markdown("### Formula")
        try:
            formula = formula_product(A, B)
            _show_element(formula)
            if formula == oracle:
                st.success("✅ Formula and oracle agree")
            else:
                st.error("❌ Formula and oracle differ")
        except InadmissibleFormulaError as e:
            st.info(f"ℹ️ No closed formula for this left factor: {e}")
