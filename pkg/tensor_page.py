"""
Tensor Space Page for the iSchur Explorer
Act with a generator of U^i(n) on a basis vector, by the closed formulas and
through U(gl_2n), and apply the Hecke generators on the right
"""

import streamlit as st

from errors import ISchurError
from json_codec import index_from_text
from tensor import (
    TensorVector,
    eta,
    generators,
    gl_action,
    hecke_action_tensor,
    iota_image,
    ui_action_closed,
)


def _fmt(vec) -> str:
    if vec.is_zero():
        return "0"
    return " + ".join(f"({c.fmt()}) w{list(i)}" for i, c in vec.terms())


def show():
    """Display the tensor space page"""

    st.markdown("<h1 class='main-header'>🔗 Tensor Space</h1>", unsafe_allow_html=True)

    col1, col2 = st.columns(2)
    with col1:
        n = int(st.number_input("n", min_value=1, max_value=4, value=1))
    with col2:
        text = st.text_input("Index i_1,...,i_r", value="1")

    try:
        vec = TensorVector.basis(n, index_from_text(text))
    except ISchurError as e:
        st.error(f"❌ {e}")
        return

    tab1, tab2 = st.tabs(["U^i(n)", "Hecke"])

    with tab1:
        gens = generators(n, inverses=True)
        gen = st.selectbox("Generator", options=gens, format_func=lambda g: "t" if g[0] == "t" else f"{g[0]}_{g[1]}")
        st.markdown(f"**iota image:** `{iota_image(gen, n)}`")

        closed = ui_action_closed(gen, vec)
        pulled = gl_action(iota_image(gen, n), vec)
        st.markdown(f"**Closed form:** {_fmt(closed)}")
        st.markdown(f"**Through U(gl):** {_fmt(pulled)}")
        if closed == pulled:
            st.success("✅ The two actions agree")
        else:
            st.error("❌ The two actions differ")

        if n >= vec.r:
            st.markdown("**eta of the result:**")
            st.code(str(eta(closed).to_json()))

    with tab2:
        j = int(st.number_input("j", min_value=1, max_value=vec.r, value=1))
        st.markdown(f"**w . T_{j}:** {_fmt(hecke_action_tensor(j, vec))}")
