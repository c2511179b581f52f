#ifndef QCORR_TOOLS_VERIFY_HPP
#define QCORR_TOOLS_VERIFY_HPP

/// Run the self-verification suite (fixed seeds) and print one pass/fail line
/// per check.  With inject_kraus_defect the dephasing Kraus set is corrupted
/// (omega doubled) so the completeness check must report a violation.
/// Returns 0 when every check passes, 1 otherwise.
int run_verify(bool inject_kraus_defect);

#endif
