#include "mbbox/pipeline.hpp"

#include "mbbox/closed_form.hpp"
#include "mbbox/mb_engine.hpp"
#include "mbbox/oracles.hpp"

namespace mbbox {

namespace {

void apply(mb::ContourSpec& c, const QuadOverrides& q) {
    if (q.nodes) c.nodes = *q.nodes;
    if (q.height) c.height = *q.height;
}

BoxValue from_breakdown(const mb::EvalBreakdown& b) {
    BoxValue v;
    v.method = Method::Residue;
    v.value = b.pieces.at("total");
    v.pieces = b.pieces;
    v.pieces["delta_pole_coefficient"] = b.delta_pole_coefficient;
    return v;
}

}  // namespace

BoxValue evaluate(const Kinematics& k, Method method, Cut cut, const QuadOverrides& quad) {
    validate(k);
    const bool mass = k.has_mass();
    switch (method) {
        case Method::ClosedForm:
            return mass ? onemass_box(k, cut) : massless_box(k, cut);
        case Method::ClosedFormAlt:
            return mass ? onemass_box_alt(k, cut) : massless_box_alt(k, cut);
        case Method::Residue:
            return from_breakdown(mass ? mb::residue_onemass(k, cut) : mb::residue_massless(k, cut));
        case Method::FeynmanQuadrature:
            return mass ? oracles::feynman_1d_onemass(k) : oracles::feynman_1d_massless(k);
        case Method::MellinBarnes:
            if (mass) {
                auto c = mb::select_contour_onemass(k.eps);
                if (quad.nodes) c.alpha.nodes = *quad.nodes;
                apply(c.beta, quad);
                return mb::mb_onemass_eval(k, c.alpha, c.beta);
            } else {
                auto c = mb::select_contour_massless(k);
                apply(c, quad);
                return mb::mb_massless_eval(k, c);
            }
        case Method::LaurentSeries: {
            BoxValue v;
            v.method = Method::LaurentSeries;
            v.value = laurent(k).evaluate(k.eps);
            return v;
        }
    }
    throw DomainError("evaluate: unknown method");
}

RegulatorSeries laurent(const Kinematics& k) {
    validate(k);
    return k.has_mass() ? onemass_box_laurent(k) : massless_box_laurent(k);
}

}  // namespace mbbox
