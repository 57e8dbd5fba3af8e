"""argv lists with a golden output file each; regenerate with
``python scripts/regen_golden.py`` and review the diff."""

CASES = {
    "chi": ["chi", "S2(3,3,4)", "--format", "json"],
    "chi_text": ["chi", "T(3,3,4)"],
    "classify": ["classify", "S2(2,3,6)", "--format", "json"],
    "stab": ["stab", "--group", "PSL(5)", "--kind", "cyclic", "--k", "3", "--format", "json"],
    "stab_reflection": ["stab", "--group", "PSL(4)", "--kind", "reflection", "--format", "tsv"],
    "hitchin": ["hitchin", "--group", "PGL(3)", "S2(3,3,4)", "--format", "json"],
    "hitchin_text": ["hitchin", "--group", "PGL(7)", "S2(3,3,4)"],
    "euclidean": ["euclidean", "--group", "E7", "S2(3,3,3)", "--format", "json"],
    "relative": ["relative", "--group", "PGL(3)", "D2(3,3)", "--format", "json"],
    "canonical": ["canonical", "--group", "SL(3)", "--boundary", "S2(3,3,3)", "--boundary", "S2(3,3,3)",
                  "--assume-hyperbolic", "--format", "json"],
    "fig8": ["fig8", "--n", "12", "--format", "json"],
    "whitehead": ["whitehead", "--n", "7", "--format", "tsv"],
    "lawton_coords": ["lawton", "coords", "--a", "1", "0", "0", "0", "-0.5+0.8660254037844386i", "0", "0", "0",
                      "-0.5-0.8660254037844386i", "--b", "0", "0", "1", "1", "0", "0", "0", "1", "0",
                      "--format", "json"],
    "lawton_coords_commas": ["lawton", "coords",
                             "--a=1,0,0,0,-0.5+0.8660254037844386i,0,0,0,-0.5-0.8660254037844386i",
                             "--b=0,0,1,1,0,0,0,1,0", "--format", "tsv"],
    "error_usage": ["lawton", "coords", "--a"],
    "lawton_points": ["lawton", "paper-points", "--format", "json"],
    "table1": ["table", "1", "--n-max", "4", "--format", "tsv"],
    "table2": ["table", "2", "--format", "tsv"],
    "table3": ["table", "3", "--n-max", "24", "--format", "tsv"],
    "table4": ["table", "4", "--n-max", "6", "--format", "json"],
    "table5": ["table", "5", "--n-max", "6", "--format", "tsv"],
    "selftest": ["selftest", "--format", "json"],
    "error_parse": ["hitchin", "--group", "PGL(3)", "S2(3,3"],
    "error_domain": ["hitchin", "--group", "PGL(3)", "S2(2,3,6)"],
}
