"""
Verify Page for the iSchur Explorer
"""

import streamlit as st

import config_manager
from errors import ISchurError
from json_codec import dumps
from suites import SUITES, run_suite


def show():
    """Display the verification page"""

    st.markdown("<h1 class='main-header'>✅ Verification Suites</h1>", unsafe_allow_html=True)

    config = config_manager.load_config()
    suite = st.selectbox("Suite", options=SUITES, index=SUITES.index("short"))

    col1, col2, col3 = st.columns(3)
    with col1:
        n = st.number_input("n", min_value=1, max_value=config['max_n'], value=1)
    with col2:
        r = st.number_input("r", min_value=1, max_value=config['max_r'], value=1)
    with col3:
        jbox = st.number_input("j box", min_value=0, max_value=2, value=config['default_jbox'])

    perturb = st.checkbox("Perturb formal sides (negative control)", value=False)

    if st.button("▶️ Run", type="primary"):
        with st.spinner(f"Running {suite} at (n, r) = ({n}, {r})..."):
            try:
                report = run_suite(suite, int(n), int(r), jbox=int(jbox), perturb=perturb or None)
            except ISchurError as e:
                st.error(f"❌ {e}")
                return

        col1, col2, col3 = st.columns(3)
        col1.metric("Cases", report.cases)
        col2.metric("Failures", report.failure_count)
        col3.metric("Wall time", f"{report.wall_time:.2f}s")

        if report.ok:
            st.success("✅ No failures")
        else:
            st.error(f"❌ {report.failure_count} failures")
            st.code(dumps(report.to_json(), indent=2), language="json")
