import streamlit as st

# Page config - MUST be first Streamlit command
st.set_page_config(
    page_title="iSchur Explorer",
    page_icon="🧮",
    layout="wide",
    initial_sidebar_state="expanded"
)

st.markdown("""
<style>
    .main-header {
        font-size: 2.2rem;
        font-weight: bold;
        margin-bottom: 1rem;
    }
</style>
""", unsafe_allow_html=True)

if 'current_page' not in st.session_state:
    st.session_state.current_page = 'products'

PAGES = [
    ('products', "🧮 Products"),
    ('verify', "✅ Verify"),
    ('tensor', "🔗 Tensor Space"),
]

with st.sidebar:
    st.markdown("## 🎯 Navigation")

    for key, label in PAGES:
        if st.button(label, use_container_width=True,
                     type="primary" if st.session_state.current_page == key else "secondary"):
            st.session_state.current_page = key
            st.rerun()

    st.markdown("---")

    if st.button("⚙️ Settings", use_container_width=True,
                 type="primary" if st.session_state.current_page == 'settings' else "secondary"):
        st.session_state.current_page = 'settings'
        st.rerun()

    st.markdown("---")
    st.markdown("### ℹ️ About")
    st.markdown("""
    **iSchur Explorer**
    - Basis and products of S^i(n, r)
    - Verification suites
    - The tensor space and its actions
    """)

if st.session_state.current_page == 'products':
    import product_page
    product_page.show()
elif st.session_state.current_page == 'verify':
    import verify_page
    verify_page.show()
elif st.session_state.current_page == 'tensor':
    import tensor_page
    tensor_page.show()
elif st.session_state.current_page == 'settings':
    import settings_page
    settings_page.show()
