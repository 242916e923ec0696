#pragma once

#include "qcq/report.hpp"

#ifndef QCQ_FIXTURE_PATH
#error "QCQ_FIXTURE_PATH must point at the fixture file"
#endif

inline const std::vector<qcq::Fixture>& test_fixtures() {
    static const auto rows = qcq::load_fixtures(QCQ_FIXTURE_PATH);
    return rows;
}

inline const qcq::Fixture& fixture(const std::string& id) { return qcq::find_fixture(test_fixtures(), id); }

inline qcq::QuasiCyclicCode fixture_code(const qcq::Fixture& f) {
    const auto F = qcq::field_make(f.q2);
    return qcq::qc_build(*f.n, F, qcq::p_parse(*f.g1, F), qcq::p_parse(*f.g2, F), qcq::p_parse(*f.t, F));
}
