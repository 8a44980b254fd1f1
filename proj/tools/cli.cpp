#include "cli.hpp"

#include "cutseq/converters.hpp"
#include "cutseq/dynamics.hpp"
#include "cutseq/errors.hpp"
#include "cutseq/json_io.hpp"
#include "cutseq/literal.hpp"
#include "cutseq/measures.hpp"
#include "cutseq/render.hpp"
#include "cutseq/subgroup.hpp"

#include <CLI11.hpp>

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

namespace cutseq::cli {

namespace {

constexpr const char* schema_version = "cutseq/1";

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    Json diagnostics = Json::array();
    int code = ok;
    std::optional<std::string> svg;   // printed raw with --output svg
};

Json envelope(const Report& r)
{
    Json j;
    j["schema"] = schema_version;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["outputs"] = r.outputs;
    j["diagnostics"] = r.diagnostics;
    return j;
}

Json error_envelope(const std::string& command, const std::string& code, const std::string& message)
{
    Json j;
    j["schema"] = schema_version;
    j["command"] = command;
    j["error"] = Json{{"code", code}, {"message", message}};
    return j;
}

Json json_arg(const std::string& text, const std::string& flag)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(flag + " is not valid JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
}

bool looks_decimal(const std::string& s)
{
    static const std::regex dec(R"(\s*[-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?\s*)");
    return std::regex_match(s, dec) && s.find_first_of(".eE") != std::string::npos;
}

// integers, decimal strings and surd literals
Real real_from(const Json& j)
{
    if (j.is_number_integer())
        return Real(j.get<long>());
    if (j.is_number_float())
        return Real(j.dump());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (looks_decimal(s))
            return Real(s);
        return to_real(parse_surd(s));
    }
    throw DomainError("expected a number or a surd literal, got " + j.dump());
}

Parity parity_arg(const std::string& s) { return parity_from_string(s); }

Parity group_arg(const std::string& s)
{
    if (s == "gamma" || s == "gamma_odd" || s == "GammaOdd" || s == "odd")
        return Parity::Odd;
    if (s == "theta" || s == "Theta" || s == "even")
        return Parity::Even;
    throw DomainError("unknown group '" + s + "' (gamma_odd or theta)");
}

int sign_arg(int s)
{
    if (s != 1 && s != -1)
        throw DomainError("--sign must be +1 or -1");
    return s;
}

void note(Report& r, const std::string& msg) { r.diagnostics.push_back(msg); }

// ---- commands ----

struct Args {
    std::string kind, value, digits, from, to, case_name = "odd", forward, backward, word, direction = "forward";
    std::optional<int> sign;
    std::size_t depth = default_max_depth, segments = 8, backward_segments = 0, steps = 1000000, letters = 24;
    std::optional<std::size_t> bound;
    std::string period, alpha, beta, group = "gamma_odd", matrix, measure, map, region, interval = "[0, \"1/2\"]";
    std::optional<std::string> seed;
    double tol = 1e-10;
    unsigned seed_digits = 100;
    int render_depth = 3, lift_depth = default_lift_depth;
    std::string window = "-1.5,1.5,1.6";
};

void cmd_expand(const Args& a, Report& r)
{
    CfKind kind = cf_kind_from_string(a.kind);
    QuadraticSurd x = parse_surd(a.value);
    r.inputs = Json{{"kind", to_string(kind)}, {"value", x.str()}, {"depth", a.depth}};
    DigitStream s = cf_expand(x, kind, a.depth);
    r.outputs = to_json(s);
    r.outputs["str"] = s.str();
    if (s.truncated)
        note(r, "expansion truncated at depth " + std::to_string(a.depth));
}

void cmd_evaluate(const Args& a, Report& r)
{
    std::optional<CfKind> kind;
    if (!a.kind.empty())
        kind = cf_kind_from_string(a.kind);
    DigitStream s = stream_from_json(json_arg(a.digits, "--digits"), kind);
    r.inputs = Json{{"digits", to_json(s)}};
    QuadraticSurd v = cf_evaluate(s);
    r.outputs = Json{{"value", v.str()}, {"decimal", real_json(to_real(v), 30)}};
}

void cmd_convert(const Args& a, Report& r)
{
    if (cf_kind_from_string(a.from) != CfKind::RCF)
        throw DomainError("convert reads RCF input (--from rcf)");
    CfKind to = cf_kind_from_string(a.to);
    DigitStream in;
    if (!a.digits.empty() == !a.value.empty())
        throw DomainError("give exactly one of --digits and --value");
    if (!a.digits.empty())
        in = stream_from_json(json_arg(a.digits, "--digits"), CfKind::RCF);
    else
        in = cf_expand(parse_surd(a.value), CfKind::RCF, a.depth);
    if (in.kind != CfKind::RCF)
        throw DomainError("--digits must be an RCF stream");
    r.inputs = Json{{"from", "rcf"}, {"to", to_string(to)}, {"digits", to_json(in)}};
    switch (to) {
    case CfKind::OCF: r.outputs = to_json(rcf_to_ocf(in)); break;
    case CfKind::ECF: r.outputs = to_json(rcf_to_ecf(in)); break;
    case CfKind::GCF: {
        ConversionResult c = rcf_to_gcf(in);
        r.outputs = to_json(c.stream);
        r.outputs["max_lookahead"] = c.max_lookahead;
        r.outputs["deep_regrouping"] = c.deep_regrouping;
        if (c.deep_regrouping)
            note(r, "some GCF digit needed more than one group of lookahead");
        break;
    }
    default: throw DomainError("convert targets ocf, ecf or gcf");
    }
}

OrientedGeodesic geodesic_args(const Args& a)
{
    if (a.forward.empty() || a.backward.empty())
        throw DomainError("--forward and --backward are required");
    return {parse_surd(a.forward), parse_surd(a.backward)};
}

void cmd_code(const Args& a, Report& r)
{
    Parity p = parity_arg(a.case_name);
    OrientedGeodesic geo = geodesic_args(a);
    r.inputs = Json{{"case", to_string(p)}, {"geodesic", to_json(geo)}, {"segments", a.segments},
                    {"backward_segments", a.backward_segments}};
    CuttingSequence cs = cutting_sequence(geo, a.segments, p, a.backward_segments);
    Json fwd = Json::array(), bwd = Json::array();
    for (const auto& s : cs.forward)
        fwd.push_back(to_json(s));
    for (const auto& s : cs.backward)
        bwd.push_back(to_json(s));
    r.outputs = Json{{"lift", to_json(cs.lift)},
                     {"base", to_json(cs.base)},
                     {"segments", fwd},
                     {"backward_segments", bwd},
                     {"forward_letters", Json{{"ascii", to_ascii(cs.forward_letters())},
                                              {"unicode", to_unicode(cs.forward_letters())}}},
                     {"backward_letters", Json{{"ascii", to_ascii(cs.backward_letters())},
                                               {"unicode", to_unicode(cs.backward_letters())}}},
                     {"shade_convention", cs.shade_convention}};
}

void cmd_parse(const Args& a, Report& r)
{
    Parity p = parity_arg(a.case_name);
    Direction dir;
    if (a.direction == "forward")
        dir = Direction::Forward;
    else if (a.direction == "backward")
        dir = Direction::Backward;
    else
        throw DomainError("--direction is forward or backward");
    std::optional<int> sign;
    if (a.sign)
        sign = sign_arg(*a.sign);
    LetterString w = parse_letters(a.word, p == Parity::Odd);
    r.inputs = Json{{"case", to_string(p)}, {"word", to_ascii(w)}, {"direction", a.direction}};
    if (sign)
        r.inputs["sign"] = *sign;
    DigitStream s = parse_cutting_sequence(w, dir, p, sign);
    r.outputs = to_json(s);
    r.outputs["str"] = s.str();
    if (s.truncated)
        note(r, "a finite word determines a prefix of the expansion only");
}

void cmd_lift(const Args& a, Report& r)
{
    Parity p = parity_arg(a.case_name);
    OrientedGeodesic geo = geodesic_args(a);
    r.inputs = Json{{"case", to_string(p)}, {"geodesic", to_json(geo)}, {"depth", a.lift_depth}};
    Lift l = lift_to_section(geo, p, a.lift_depth);
    r.outputs = Json{{"g", to_json(l.g)}, {"geodesic", to_json(l.geodesic)},
                     {"membership", to_json(classify_subgroup(l.g))}};
}

void cmd_length(const Args& a, Report& r)
{
    CfKind kind = cf_kind_from_string(a.kind.empty() ? "ocf" : a.kind);
    if (kind != CfKind::OCF && kind != CfKind::ECF)
        throw DomainError("length takes --kind ocf or ecf");
    Parity p = kind == CfKind::OCF ? Parity::Odd : Parity::Even;
    DigitList period = digits_from_json(json_arg(a.period, "--period"));
    r.inputs = Json{{"kind", to_string(kind)}, {"period", to_json(period)}};
    GeodesicLengthReport rep = closed_length(period, p);
    const double tol = 1e-9;
    r.outputs = Json{{"length", real_json(rep.length)},
                     {"via_product", real_json(rep.via_product)},
                     {"via_trace", real_json(rep.via_trace)},
                     {"via_derivative", real_json(rep.via_derivative)},
                     {"relative_error", real_json(rep.relative_error, 6)},
                     {"tolerance", tol},
                     {"pass", rep.relative_error <= tol},
                     {"matrix", to_json(rep.matrix)},
                     {"membership", to_json(rep.membership)},
                     {"multiplicity", rep.multiplicity}};
    if (rep.multiplicity > 1)
        note(r, "period is a proper power; the primitive geodesic is " + std::to_string(rep.multiplicity) +
                    " times shorter");
}

void cmd_equiv(const Args& a, Report& r)
{
    Parity p = group_arg(a.group);
    QuadraticSurd x = parse_surd(a.alpha), y = parse_surd(a.beta);
    r.inputs = Json{{"alpha", x.str()}, {"beta", y.str()},
                    {"group", p == Parity::Odd ? "gamma_odd" : "theta"}};
    if (a.bound)
        r.inputs["bound"] = *a.bound;
    EquivalenceResult e = equivalent(x, y, p, a.bound);
    r.outputs = Json{{"result", e.equivalent ? "Equivalent" : "NotWithinBound"},
                     {"equivalent", e.equivalent},
                     {"alpha_normalized", e.alpha.str()},
                     {"beta_normalized", e.beta.str()},
                     {"bound", e.bound}};
    if (e.equivalent) {
        r.outputs["r"] = e.r;
        r.outputs["s"] = e.s;
        r.outputs["witness"] = e.witness->str();
    } else {
        if (e.alpha.D() != e.beta.D())
            note(r, "the surds lie in different quadratic fields");
        else
            note(r, "no common tail within the bound; inconclusive");
        r.code = inconclusive;
    }
}

void cmd_periodic(const Args& a, Report& r)
{
    Parity p = parity_arg(a.case_name);
    QuadraticSurd x = parse_surd(a.value);
    r.inputs = Json{{"value", x.str()}, {"case", to_string(p)}};
    PeriodicityReport rep = purely_periodic(x, p);
    r.outputs = Json{{"purely_periodic", rep.window},
                     {"window", rep.window},
                     {"expansion", rep.expansion},
                     {"conjugate", x.conjugate().str()},
                     {"period", to_json(rep.period)},
                     {"reversal", rep.reversal ? Json(*rep.reversal) : Json(nullptr)}};
}

void cmd_measure_check(const Args& a, Report& r)
{
    MeasureName m = measure_from_string(a.measure);
    MapName map = a.map.empty() ? natural_map(m) : map_from_string(a.map);
    Json region = json_arg(a.region, "--region");
    r.inputs = Json{{"measure", to_string(m)}, {"map", to_string(map)}, {"region", region}, {"tolerance", a.tol},
                    {"digits", configured_digits()}};
    InvarianceReport rep;
    if (region.is_array() && region.size() == 2 && region[0].is_array()) {
        if (region[1].size() != 2 || region[0].size() != 2)
            throw DomainError("a rectangle is [[x0,x1],[y0,y1]]");
        Rect rect{{real_from(region[0][0]), real_from(region[0][1])}, {real_from(region[1][0]), real_from(region[1][1])}};
        rep = check_invariance(m, map, rect, a.tol);
    } else if (region.is_array() && region.size() == 2) {
        rep = check_invariance(m, map, Interval{real_from(region[0]), real_from(region[1])}, a.tol);
    } else {
        throw DomainError("--region is [a,b] or [[x0,x1],[y0,y1]]");
    }
    r.outputs = Json{{"region_mass", real_json(rep.region_mass)},
                     {"preimage_mass", real_json(rep.preimage_mass)},
                     {"difference", real_json(rep.difference, 6)},
                     {"tolerance", a.tol},
                     {"pass", rep.pass},
                     {"branches_exact", rep.branches_exact}};
}

Real seed_value(const std::string& s)
{
    using boost::math::constants::pi;
    using boost::math::constants::e;
    if (s == "frac(pi)")
        return pi<Real>() - 3;
    if (s == "frac(e)")
        return e<Real>() - 2;
    return real_from(Json(s));
}

void cmd_birkhoff(const Args& a, Report& r)
{
    if (!a.seed)
        throw DomainError("--seed is required");
    BirkhoffMap map;
    MeasureName m;
    if (a.map.empty() || a.map == "T_o") {
        map = BirkhoffMap::TOdd;
        m = MeasureName::MuOdd;
    } else if (a.map == "tau_o") {
        map = BirkhoffMap::TauOdd;
        m = MeasureName::NuOdd;
    } else {
        throw DomainError("birkhoff runs T_o or tau_o (the maps with a finite invariant measure)");
    }
    Json iv = json_arg(a.interval, "--interval");
    if (!iv.is_array() || iv.size() != 2)
        throw DomainError("--interval is [a,b]");
    PrecisionScope scope(a.seed_digits);
    Real lo = real_from(iv[0]), hi = real_from(iv[1]);
    Real x0 = seed_value(*a.seed);
    r.inputs = Json{{"map", map == BirkhoffMap::TOdd ? "T_o" : "tau_o"}, {"interval", iv}, {"seed", *a.seed},
                    {"steps", a.steps}, {"digits", a.seed_digits}};
    BirkhoffResult res = birkhoff_average(map, lo, hi, x0, a.steps, a.seed_digits);
    r.outputs = Json{{"average", real_json(res.average, 12)}, {"steps", res.steps}, {"aborted", res.aborted}};
    // clip to the domain for the comparison value
    Real dlo = map == BirkhoffMap::TOdd ? Real(0) : golden_real() - 2;
    Real dhi = map == BirkhoffMap::TOdd ? Real(1) : golden_real();
    Real clo = max(lo, dlo), chi = min(hi, dhi);
    if (clo < chi) {
        Real target = measure_mass({m, true}, Interval{clo, chi});
        r.outputs["expected"] = real_json(target, 12);
        r.outputs["difference"] = real_json(abs(res.average - target), 6);
    }
    if (res.aborted)
        note(r, "orbit hit a branch boundary after " + std::to_string(res.steps) + " points");
}

RenderWindow window_arg(const std::string& s)
{
    RenderWindow w;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> w.xmin >> c1 >> w.xmax >> c2 >> w.ymax) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
        throw DomainError("--window is xmin,xmax,ymax");
    return w;
}

void cmd_render(const Args& a, Report& r)
{
    Parity p = parity_arg(a.case_name);
    std::optional<OrientedGeodesic> geo;
    if (!a.forward.empty() || !a.backward.empty())
        geo = geodesic_args(a);
    RenderWindow w = window_arg(a.window);
    r.inputs = Json{{"case", to_string(p)}, {"geodesic", geo ? to_json(*geo) : Json(nullptr)},
                    {"window", Json::array({w.xmin, w.xmax, w.ymax})}, {"depth", a.render_depth},
                    {"letters", a.letters}};
    r.svg = render_svg(geo, p, w, a.render_depth, a.letters);
    r.outputs = Json{{"svg", *r.svg}};
}

void cmd_classify(const Args& a, Report& r)
{
    UnimodularMatrix m = parse_matrix(a.matrix);
    r.inputs = Json{{"matrix", to_json(m)}};
    r.outputs = to_json(classify_subgroup(m));
}

using Handler = std::function<void(const Args&, Report&)>;

} // namespace

namespace {

int run_one(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool batch)
{
    CLI::App app{"Continued fractions and cutting sequences of geodesics on the odd and even modular surfaces",
                 "cutseq"};
    app.require_subcommand(1);
    std::string output = "json";
    app.add_option("--output", output, "json or svg (svg applies to render)")
        ->check(CLI::IsMember({"json", "svg"}));

    Args a;
    std::vector<std::pair<CLI::App*, Handler>> cmds;
    auto sub = [&](const char* name, const char* help, Handler h) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        cmds.push_back({s, std::move(h)});
        return s;
    };

    auto* expand = sub("expand", "continued fraction expansion of a surd", cmd_expand);
    expand->add_option("--kind", a.kind, "rcf, ocf, gcf, ecf or eecf")->required();
    expand->add_option("--value", a.value, "surd literal, e.g. (1+1*sqrt(2))/1")->required();
    expand->add_option("--depth", a.depth, "digit budget before truncating");

    auto* evaluate = sub("evaluate", "exact value of a digit stream", cmd_evaluate);
    evaluate->add_option("--digits", a.digits, "JSON digit stream")->required();
    evaluate->add_option("--kind", a.kind, "kind when the stream omits it");

    auto* convert = sub("convert", "convert an RCF expansion", cmd_convert);
    convert->add_option("--from", a.from, "source kind (rcf)")->required();
    convert->add_option("--to", a.to, "ocf, ecf or gcf")->required();
    convert->add_option("--digits", a.digits, "JSON RCF stream");
    convert->add_option("--value", a.value, "surd literal, expanded to RCF first");
    convert->add_option("--depth", a.depth, "RCF digit budget for --value");

    auto* code = sub("code", "cutting sequence of a geodesic", cmd_code);
    code->add_option("--case", a.case_name, "odd or even");
    code->add_option("--forward", a.forward, "forward endpoint")->required();
    code->add_option("--backward", a.backward, "backward endpoint")->required();
    code->add_option("--segments", a.segments, "return segments after xi");
    code->add_option("--backward-segments", a.backward_segments, "return segments before xi");

    auto* parse = sub("parse", "digits from a cutting sequence", cmd_parse);
    parse->add_option("--case", a.case_name, "odd or even");
    parse->add_option("--word", a.word, "letters, e.g. lRrL (odd) or LLR (even)")->required();
    parse->add_option("--direction", a.direction, "forward or backward");
    parse->add_option("--sign", a.sign, "sign of the forward endpoint (needed for even words)");

    auto* lift = sub("lift", "move a geodesic into the section", cmd_lift);
    lift->add_option("--case", a.case_name, "odd or even");
    lift->add_option("--forward", a.forward, "forward endpoint")->required();
    lift->add_option("--backward", a.backward, "backward endpoint")->required();
    lift->add_option("--depth", a.lift_depth, "generator budget");

    auto* length = sub("length", "length of the closed geodesic of a period", cmd_length);
    length->add_option("--kind", a.kind, "ocf or ecf");
    length->add_option("--period", a.period, "JSON digit list, e.g. [[3,-1],[1,1],[1,1]]")->required();

    auto* equiv = sub("equiv", "tail test for equivalence under Gamma or Theta", cmd_equiv);
    equiv->add_option("--alpha", a.alpha, "surd")->required();
    equiv->add_option("--beta", a.beta, "surd")->required();
    equiv->add_option("--group", a.group, "gamma_odd or theta");
    equiv->add_option("--bound", a.bound, "tail depth bound");

    auto* periodic = sub("periodic", "purely periodic test", cmd_periodic);
    periodic->add_option("--value", a.value, "surd > 1")->required();
    periodic->add_option("--case", a.case_name, "odd (OCF) or even (ECF)");

    auto* measure = sub("measure-check", "invariance of a measure on a region", cmd_measure_check);
    measure->add_option("--measure", a.measure, "mu_o, nu_o, mu_bar_o, mu_e, nu_e, mu_bar_e")->required();
    measure->add_option("--map", a.map, "T_o, tau_o, T_bar_o, T_e, tau_e, T_bar_e");
    measure->add_option("--region", a.region, "[a,b] or [[x0,x1],[y0,y1]]; entries are numbers or surd strings")
        ->required();
    measure->add_option("--tol", a.tol, "tolerance");

    auto* birkhoff = sub("birkhoff", "time average of an interval indicator", cmd_birkhoff);
    birkhoff->add_option("--map", a.map, "T_o or tau_o");
    birkhoff->add_option("--interval", a.interval, "[a,b]");
    birkhoff->add_option("--seed", a.seed, "frac(pi), frac(e), a decimal or a surd literal")->required();
    birkhoff->add_option("--steps", a.steps, "orbit length N");
    birkhoff->add_option("--digits", a.seed_digits, "working precision of the orbit");

    auto* render = sub("render", "SVG of the checkered Farey tessellation", cmd_render);
    render->add_option("--case", a.case_name, "odd (shaded letters) or even");
    render->add_option("--forward", a.forward, "forward endpoint");
    render->add_option("--backward", a.backward, "backward endpoint");
    render->add_option("--window", a.window, "xmin,xmax,ymax");
    render->add_option("--depth", a.render_depth, "Farey depth below each unit interval");
    render->add_option("--letters", a.letters, "crossings to label");

    auto* classify = sub("classify", "membership in Gamma and Theta", cmd_classify);
    classify->add_option("--matrix", a.matrix, "[[a,b],[c,d]] with determinant 1")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        // a batch reader expects one line per request
        if (batch)
            out << error_envelope(args.empty() ? "" : args[0], "usage", e.what()).dump() << "\n";
        err << "error: " << e.what() << "\n\n" << app.help();
        return invalid;
    }

    Report r;
    Handler handler;
    for (auto& [s, h] : cmds)
        if (s->parsed()) {
            r.command = s->get_name();
            handler = h;
        }
    if (output == "svg" && r.command != "render") {
        err << "error: --output svg is only available for render\n";
        return invalid;
    }
    if (r.command == "render" && !app.get_option("--output")->count())
        output = "svg";

    PrecisionScope precision(configured_digits());
    try {
        handler(a, r);
    } catch (const Error& e) {
        out << error_envelope(r.command, e.code(), e.what()).dump() << "\n";
        err << "error: " << e.what() << "\n";
        return invalid;
    } catch (const std::logic_error& e) {
        out << error_envelope(r.command, "internal", e.what()).dump() << "\n";
        err << "internal error: " << e.what() << "\n";
        return internal;
    } catch (const std::runtime_error& e) {
        out << error_envelope(r.command, "invalid input", e.what()).dump() << "\n";
        err << "error: " << e.what() << "\n";
        return invalid;
    }

    if (output == "svg")
        out << *r.svg;
    else
        out << envelope(r).dump() << "\n";
    return r.code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    return run_one(args, out, err, false);
}

// internal error > invalid input > inconclusive > ok
int severity(int code) { return code == internal ? 3 : code == invalid ? 2 : code == inconclusive ? 1 : 0; }

int run_batch(std::istream& in, std::ostream& out, std::ostream& err)
{
    int worst = ok;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::vector<std::string> args;
        try {
            Json req = Json::parse(line);
            if (!req.is_object() || !req.contains("command") || !req["command"].is_string())
                throw std::runtime_error("a request is {\"command\": name, \"args\": {...}}");
            args.push_back(req["command"].get<std::string>());
            if (req.contains("args")) {
                if (!req["args"].is_object())
                    throw std::runtime_error("\"args\" must be an object");
                for (const auto& [k, v] : req["args"].items()) {
                    args.push_back("--" + k);
                    args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
                }
            }
        } catch (const std::exception& e) {
            out << error_envelope("batch", "parse", e.what()).dump() << "\n";
            err << "error: " << e.what() << "\n";
            if (severity(invalid) > severity(worst))
                worst = invalid;
            continue;
        }
        int code = run_one(args, out, err, true);
        if (severity(code) > severity(worst))
            worst = code;
    }
    return worst;
}

} // namespace cutseq::cli
