#include "adl/eval/eval.hpp"

#include "adl/core/ops.hpp"

namespace adl {

namespace {

class Evaluator {
 public:
  Value run(const Env& env, const Term& t) {
    return visit(t, overloaded{
                        [&](const term::Var& v) {
                          if (const auto* val = env.lookup(v.name)) return *val;
                          throw EvalError("unbound variable '" + v.name + "' at runtime");
                        },
                        [&](const term::Const& c) { return Value::real(c.value); },
                        [&](const term::PrimOp& p) {
                          const auto& op = lookup_op(p.op);
                          double buf[4];
                          std::vector<double> big;
                          double* xs = buf;
                          if (p.args.size() > 4) {
                            big.resize(p.args.size());
                            xs = big.data();
                          }
                          for (std::size_t i = 0; i < p.args.size(); ++i) xs[i] = run(env, p.args[i]).as_real();
                          return Value::real(op.apply({xs, p.args.size()}));
                        },
                        [&](const term::Lam& l) { return Value::closure({l.var, l.body, env}); },
                        [&](const term::App& a) {
                          auto fn = run(env, a.fn);
                          auto arg = run(env, a.arg);
                          return call(fn, arg);
                        },
                        [&](const term::Tuple& tu) {
                          std::vector<Value> items;
                          items.reserve(tu.items.size());
                          for (const auto& i : tu.items) items.push_back(run(env, i));
                          return Value::tuple(std::move(items));
                        },
                        [&](const term::MatchTuple& m) {
                          auto s = run(env, m.scrutinee);
                          if (s.kind() != Value::Kind::Tuple || s.items().size() != m.vars.size()) {
                            throw EvalError("tuple match on a value of the wrong shape");
                          }
                          Env inner = env;
                          for (std::size_t i = 0; i < m.vars.size(); ++i) inner = inner.bind(m.vars[i], s.items()[i]);
                          return run(inner, m.body);
                        },
                        [&](const term::Inject& i) { return Value::tag(i.ctor, run(env, i.payload)); },
                        [&](const term::MatchVariant& m) {
                          auto s = run(env, m.scrutinee);
                          for (const auto& b : m.branches) {
                            if (b.ctor == s.ctor()) return run(env.bind(b.var, s.payload()), b.body);
                          }
                          throw EvalError("no branch for constructor '" + s.ctor() + "'");
                        },
                        [&](const term::Nil&) { return Value::list({}); },
                        [&](const term::Cons& c) {
                          auto h = run(env, c.head);
                          auto tl = run(env, c.tail);
                          if (tl.kind() != Value::Kind::List) throw EvalError("cons onto a non-list");
                          std::vector<Value> items;
                          items.reserve(tl.items().size() + 1);
                          items.push_back(std::move(h));
                          items.insert(items.end(), tl.items().begin(), tl.items().end());
                          return Value::list(std::move(items));
                        },
                        [&](const term::Fold& f) {
                          auto over = run(env, f.over);
                          if (over.kind() != Value::Kind::List) throw EvalError("fold over a non-list");
                          auto acc = run(env, f.base);
                          const auto& items = over.items();
                          for (std::size_t i = items.size(); i-- > 0;) {
                            acc = run(env.bind(f.head_var, items[i]).bind(f.acc_var, acc), f.step);
                          }
                          return acc;
                        },
                    });
  }

  Value call(const Value& fn, const Value& arg) {
    const auto& c = fn.as_closure();
    return run(c.env.bind(c.var, arg), c.body);
  }
};

}  // namespace

Value eval(const Env& env, const Term& t) { return Evaluator{}.run(env, t); }

Value apply(const Value& fn, const Value& arg) { return Evaluator{}.call(fn, arg); }

}  // namespace adl
