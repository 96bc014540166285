#include "estarlab/workspace.hpp"

#include "estarlab/errors.hpp"

namespace estarlab {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& message) {
    fail(Errc::parse_error, path + ": " + message);
}

std::vector<std::string> name_list(const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array of point names");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) parse_fail(path, "expected point names as strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

json mask_to_names(Mask m, const FiniteSpace& sp) {
    json out = json::array();
    for (int i = 0; i < sp.point_count(); ++i)
        if (has_point(m, i)) out.push_back(sp.points()[i]);
    return out;
}

}  // namespace

OperationSpec operation_spec_from_json(const json& j, const FiniteSpace& sp,
                                       const std::string& path) {
    if (!j.is_object()) parse_fail(path, "expected an operation object");
    const std::string kind = j.value("kind", "");
    if (kind == "identity") return OperationSpec::identity();
    if (kind == "constant-x") return OperationSpec::constant_x();
    if (kind == "closure") return OperationSpec::closure_op();
    if (kind == "table") {
        if (!j.contains("entries")) parse_fail(path, "table operation needs \"entries\"");
        std::vector<std::pair<Mask, Mask>> entries;
        std::size_t i = 0;
        for (const auto& e : j.at("entries")) {
            const std::string epath = path + "/entries/" + std::to_string(i++);
            if (!e.is_array() || e.size() != 2)
                parse_fail(epath, "expected [key-set, image-set] pairs");
            entries.emplace_back(sp.mask_of(name_list(e[0], epath + "/0")),
                                 sp.mask_of(name_list(e[1], epath + "/1")));
        }
        return OperationSpec::from_table(std::move(entries));
    }
    if (kind == "piecewise") {
        if (!j.contains("cond") || !j.contains("then") || !j.contains("else"))
            parse_fail(path, "piecewise operation needs \"cond\", \"then\" and \"else\"");
        const json& cj = j.at("cond");
        const std::string cpath = path + "/cond";
        const std::string ckind = cj.value("kind", "");
        Condition cond;
        if (ckind == "contains-point") {
            if (!cj.contains("point")) parse_fail(cpath, "contains-point needs \"point\"");
            cond = Condition::contains_point_of(sp.point_index(cj.at("point").get<std::string>()));
        } else if (ckind == "equals-set") {
            cond = Condition::equals(sp.mask_of(name_list(cj.at("set"), cpath + "/set")));
        } else if (ckind == "member-of") {
            std::vector<Mask> sets;
            std::size_t i = 0;
            for (const auto& e : cj.at("sets"))
                sets.push_back(sp.mask_of(name_list(e, cpath + "/sets/" + std::to_string(i++))));
            cond = Condition::member_of(std::move(sets));
        } else {
            parse_fail(cpath, "unknown condition kind \"" + ckind + "\"");
        }
        return OperationSpec::piecewise(cond,
                                        operation_spec_from_json(j.at("then"), sp, path + "/then"),
                                        operation_spec_from_json(j.at("else"), sp, path + "/else"));
    }
    parse_fail(path, "unknown operation kind \"" + kind + "\"");
}

json operation_spec_to_json(const OperationSpec& spec, const FiniteSpace& sp) {
    json j;
    switch (spec.kind) {
        case OperationSpec::Kind::identity: j["kind"] = "identity"; break;
        case OperationSpec::Kind::constant_x: j["kind"] = "constant-x"; break;
        case OperationSpec::Kind::closure_op: j["kind"] = "closure"; break;
        case OperationSpec::Kind::table: {
            j["kind"] = "table";
            j["entries"] = json::array();
            for (const auto& [k, v] : spec.table)
                j["entries"].push_back(json::array({mask_to_names(k, sp), mask_to_names(v, sp)}));
            break;
        }
        case OperationSpec::Kind::piecewise: {
            j["kind"] = "piecewise";
            json cj;
            switch (spec.cond.kind) {
                case Condition::Kind::contains_point:
                    cj["kind"] = "contains-point";
                    cj["point"] = sp.points()[spec.cond.point];
                    break;
                case Condition::Kind::equals_set:
                    cj["kind"] = "equals-set";
                    cj["set"] = mask_to_names(spec.cond.set, sp);
                    break;
                case Condition::Kind::member_of: {
                    cj["kind"] = "member-of";
                    cj["sets"] = json::array();
                    for (Mask m : spec.cond.list) cj["sets"].push_back(mask_to_names(m, sp));
                    break;
                }
            }
            j["cond"] = cj;
            j["then"] = operation_spec_to_json(spec.children[0], sp);
            j["else"] = operation_spec_to_json(spec.children[1], sp);
            break;
        }
    }
    return j;
}

Workspace parse_workspace_json(const json& doc) {
    if (!doc.is_object()) parse_fail("/", "document must be a JSON object");
    if (!doc.contains("points")) parse_fail("/points", "missing");
    if (!doc.contains("opens")) parse_fail("/opens", "missing");

    Workspace w;
    w.complete_topology = doc.value("complete_topology", false);

    std::vector<std::string> points = name_list(doc.at("points"), "/points");
    std::vector<std::vector<std::string>> opens;
    std::size_t i = 0;
    for (const auto& e : doc.at("opens"))
        opens.push_back(name_list(e, "/opens/" + std::to_string(i++)));
    w.space = validate_topology(std::move(points), opens,
                                w.complete_topology ? TopologyMode::complete
                                                    : TopologyMode::reject);

    if (doc.contains("operations")) {
        if (!doc.at("operations").is_object()) parse_fail("/operations", "expected an object");
        for (const auto& [name, body] : doc.at("operations").items()) {
            const OperationSpec spec =
                operation_spec_from_json(body, *w.space, "/operations/" + name);
            w.operations[name] = bind_operation(w.space, spec);
        }
    }
    if (doc.contains("functions")) {
        if (!doc.at("functions").is_object()) parse_fail("/functions", "expected an object");
        for (const auto& [name, body] : doc.at("functions").items()) {
            const std::string fpath = "/functions/" + name;
            if (!body.is_object() || !body.contains("table"))
                parse_fail(fpath, "function needs a \"table\" object");
            std::map<std::string, std::string> table;
            for (const auto& [from, to] : body.at("table").items()) {
                if (!to.is_string()) parse_fail(fpath + "/table/" + from, "expected a point name");
                table[from] = to.get<std::string>();
            }
            w.functions[name] = std::move(table);
        }
    }
    return w;
}

Workspace parse_workspace(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return parse_workspace_json(doc);
}

json workspace_to_json(const Workspace& w) {
    const FiniteSpace& sp = *w.space;
    json j;
    j["points"] = sp.points();
    j["opens"] = json::array();
    for (Mask m : sp.opens()) j["opens"].push_back(mask_to_names(m, sp));
    if (w.complete_topology) j["complete_topology"] = true;
    if (!w.operations.empty()) {
        j["operations"] = json::object();
        for (const auto& [name, op] : w.operations)
            j["operations"][name] = operation_spec_to_json(op->spec(), sp);
    }
    if (!w.functions.empty()) {
        j["functions"] = json::object();
        for (const auto& [name, table] : w.functions) {
            json t = json::object();
            for (const auto& [from, to] : table) t[from] = to;
            j["functions"][name] = {{"table", t}};
        }
    }
    return j;
}

FiniteFunction resolve_function(const Workspace& dom, const std::string& name,
                                const SpacePtr& codomain) {
    auto it = dom.functions.find(name);
    if (it == dom.functions.end()) fail(Errc::parse_error, "unknown function name: " + name);
    const FiniteSpace& X = *dom.space;
    std::vector<int> table(X.point_count(), -1);
    for (const auto& [from, to] : it->second)
        table[X.point_index(from)] = codomain->point_index(to);
    for (int x = 0; x < X.point_count(); ++x)
        if (table[x] < 0)
            fail(Errc::parse_error,
                 "function " + name + " is missing an image for point " + X.points()[x]);
    return FiniteFunction(dom.space, codomain, std::move(table));
}

}  // namespace estarlab
