#pragma once

#include "world.hpp"

namespace specforge {

bool is_event_form(const SExpr& form);

DefUnEv parse_defun(const World& w, const SExpr& form);
DefThmEv parse_defthm(const World& w, const SExpr& form);
DefConstEv parse_defconst(const World& w, const SExpr& form, long fuel);

// Admits one surface event form: defun, defthm, defconst, defspec or
// instance-of-defspec.
World process_event_form(const World& w, const SExpr& form,
                         const AdmitOptions& opts);

}  // namespace specforge
