"""
Settings Page for the iSchur Explorer
Edits the desk-scale caps, worker threads and output directory in ischur_config.json
"""

import streamlit as st
import config_manager


def show():
    """Display the settings page"""

    st.markdown("<h1 class='main-header'>⚙️ Settings</h1>", unsafe_allow_html=True)

    config = config_manager.load_config()
    ceiling = config_manager.SETTING_MAXIMUMS
    st.markdown(f"**Config file:** `{config_manager.get_config_path()}`")

    tab1, tab2 = st.tabs(["📏 Caps", "🔧 Runtime"])

    # ===== TAB 1: CAPS =====
    with tab1:
        with st.form("caps_form"):
            max_n = st.number_input("max_n", min_value=1, max_value=ceiling["max_n"], value=config['max_n'])
            max_r = st.number_input("max_r", min_value=1, max_value=ceiling["max_r"], value=config['max_r'])
            max_basis = st.number_input("max_basis", min_value=1, max_value=ceiling["max_basis"],
                                        value=config['max_basis'], step=1000)
            max_group_rank = st.number_input("max_group_rank", min_value=1, max_value=ceiling["max_group_rank"],
                                             value=config['max_group_rank'])
            submitted = st.form_submit_button("💾 Save Caps", use_container_width=True, type="primary")

            if submitted:
                _save({'max_n': max_n, 'max_r': max_r, 'max_basis': max_basis,
                       'max_group_rank': max_group_rank}, config)

    # ===== TAB 2: RUNTIME =====
    with tab2:
        with st.form("runtime_form"):
            threads = st.number_input("Worker threads", min_value=1, max_value=64, value=config['threads'],
                                      help="ISCHUR_THREADS overrides this value")
            default_jbox = st.number_input("Default j box", min_value=0, max_value=ceiling["default_jbox"],
                                           value=config['default_jbox'])
            output_dir = st.text_input("Table output directory", value=config['output_dir'])
            submitted = st.form_submit_button("💾 Save Runtime Settings", use_container_width=True,
                                              type="primary")

            if submitted:
                _save({'threads': threads, 'default_jbox': default_jbox, 'output_dir': output_dir.strip()},
                      config)


def _save(changes, config):
    changed = {k: v for k, v in changes.items() if config.get(k) != v}
    if not changed:
        st.info("ℹ️ No changes made")
        return
    try:
        for key, value in changed.items():
            config_manager.update_setting(key, int(value) if key != 'output_dir' else value)
        st.success(f"✅ Saved {', '.join(changed)}")
        st.rerun()
    except ValueError as e:
        st.error(f"❌ Error updating settings: {str(e)}")
