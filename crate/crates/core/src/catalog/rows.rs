use super::{CatalogRow, Condition::*, Derived, Table2Row, Table3Row, TypeId};

const I3: [[&str; 3]; 3] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]];

pub static ROWS: [CatalogRow; 22] = [
    CatalogRow {
        id: TypeId::P1,
        params: &["alpha", "beta", "gamma"],
        conditions: &[NonZero("alpha*beta*gamma")],
        potential: "alpha^2*beta*x*y*z+beta^2*gamma*y*z*x+gamma^2*alpha*z*x*y-alpha^2*gamma*x*z*y-gamma^2*beta*z*y*x-beta^2*alpha*y*x*z",
        relations: ["alpha^2*beta*y*z-alpha^2*gamma*z*y", "beta^2*gamma*z*x-beta^2*alpha*x*z", "gamma^2*alpha*x*y-gamma^2*beta*y*x"],
        nakayama: [["alpha^2/(beta*gamma)", "0", "0"], ["0", "beta^2/(alpha*gamma)", "0"], ["0", "0", "gamma^2/(alpha*beta)"]],
        erratum: None,
        derived: &[],
        table2: Some(Table2Row { params: &["alpha"], conditions: &[EqualsOne("alpha^3")], potential: "x*y*z + y*z*x + z*x*y - alpha*(x*z*y + z*y*x + y*x*z)" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z)",
            theta: [["alpha", "0", "0"], ["0", "beta", "0"], ["0", "0", "gamma"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::P2,
        params: &["alpha"],
        conditions: &[NonZero("alpha")],
        potential: "x*y*z+alpha*y*z*x+alpha^2*z*x*y-alpha*x*z*y-alpha^2*z*y*x-y*x*z+y*y*z-2*alpha*y*z*y+alpha^2*z*y*y",
        relations: ["y*z-alpha*z*y", "y*z-2*alpha*z*y+alpha*z*x-x*z", "alpha^2*y*y+alpha^2*x*y-alpha^2*y*x"],
        nakayama: [["1/alpha", "3/alpha", "0"], ["0", "1/alpha", "0"], ["0", "0", "alpha^2"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z)",
            theta: [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "alpha"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::P3,
        params: &[],
        conditions: &[],
        potential: "-x*y*z-y*z*x-z*x*y+x*z*y+z*y*x+y*x*z-z*z*x+2*z*x*z-x*z*z-z*y*y+z*y*z+z*z*y-y*y*z+2*y*z*y-2*y*z*z-z*z*z",
        relations: ["z*y-y*z-z*z", "x*z-y*z-2*z*z-z*x+2*z*y", "-x*y+y*x-y*y-z*x+2*x*z+y*z+z*y-z*z"],
        nakayama: [["1", "3", "3"], ["0", "1", "3"], ["0", "0", "1"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z)",
            theta: [["1", "1", "0"], ["0", "1", "1"], ["0", "0", "1"]],
            g: I3,
            c: "-1",
        },
    },
    CatalogRow {
        id: TypeId::S1,
        params: &["alpha", "beta", "gamma"],
        conditions: &[NonZero("alpha"), NonZero("beta"), NonZero("gamma"), NotOne("alpha*beta*gamma")],
        potential: "beta*x*y*z+gamma*y*z*x+alpha*z*x*y-alpha*beta*x*z*y-alpha*gamma*z*y*x-beta*gamma*y*x*z",
        relations: ["beta*y*z-alpha*beta*z*y", "gamma*z*x-beta*gamma*x*z", "alpha*x*y-alpha*gamma*y*x"],
        nakayama: [["beta/gamma", "0", "0"], ["0", "gamma/alpha", "0"], ["0", "0", "alpha/beta"]],
        erratum: None,
        derived: &[("a", Derived::CubeRoot("alpha")), ("b", Derived::CubeRoot("beta")), ("c", Derived::CubeRoot("gamma"))],
        table2: Some(Table2Row { params: &["alpha"], conditions: &[NonZero("alpha"), NotOne("alpha^3")], potential: "x*y*z + y*z*x + z*x*y - alpha*(x*z*y + z*y*x + y*x*z)" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - a*b*c*(x*z*y + z*y*x + y*x*z)",
            theta: [["b/c", "0", "0"], ["0", "c/a", "0"], ["0", "0", "a/b"]],
            g: I3,
            c: "1/(a*b*c)",
        },
    },
    CatalogRow {
        id: TypeId::S2,
        params: &["alpha", "beta"],
        conditions: &[NonZero("alpha*beta")],
        potential: "-y*z*x-x*z*y+x*x*z/beta+z*x*x/alpha+alpha*y*y*z+beta*z*y*y",
        relations: ["x*z/beta-z*y", "alpha*y*z-z*x", "x*x/alpha+beta*y*y"],
        nakayama: [["0", "-alpha", "0"], ["-1/beta", "0", "0"], ["0", "0", "beta/alpha"]],
        erratum: None,
        derived: &[("a", Derived::CubeRoot("alpha")), ("b", Derived::CubeRoot("beta"))],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y + (x*z*y + z*y*x + y*x*z)",
            theta: [["0", "-a^2*b", "0"], ["-1/(a*b^2)", "0", "0"], ["0", "0", "b/a"]],
            g: I3,
            c: "-1",
        },
    },
    CatalogRow {
        id: TypeId::S3,
        params: &["alpha", "beta", "gamma"],
        conditions: &[NonZero("alpha"), NonZero("beta"), NonZero("gamma"), NotOne("alpha*beta*gamma")],
        potential: "-x*z*y-z*y*x-y*x*z+beta*x*x*x+gamma*y*y*y+alpha*z*z*z",
        relations: ["beta*x*x-z*y", "gamma*y*y-x*z", "alpha*z*z-y*x"],
        nakayama: I3,
        erratum: None,
        derived: &[("a", Derived::CubeRoot("alpha")), ("b", Derived::CubeRoot("beta")), ("c", Derived::CubeRoot("gamma"))],
        table2: Some(Table2Row { params: &["alpha"], conditions: &[NonZero("alpha"), NotOne("alpha")], potential: "(x*z*y + z*y*x + y*x*z) - alpha*(x*x*x + y*y*y + z*z*z)" }),
        table3: Table3Row {
            w0: "(x*z*y + z*y*x + y*x*z) - a*b*c*(x*x*x + y*y*y + z*z*z)",
            theta: I3,
            g: [["b", "0", "0"], ["0", "c", "0"], ["0", "0", "a"]],
            c: "-a*b*c",
        },
    },
    CatalogRow {
        id: TypeId::S1p,
        params: &["alpha", "beta"],
        conditions: &[NonZero("alpha"), NonZero("beta"), NotOne("alpha*beta^2")],
        potential: "beta*x*y*z+beta*y*z*x+alpha*z*x*y-alpha*beta*x*z*y-alpha*beta*z*y*x-beta^2*y*x*z+beta*x*x*x",
        relations: ["beta*x*x+beta*y*z-alpha*beta*z*y", "beta*z*x-beta^2*x*z", "alpha*x*y-alpha*beta*y*x"],
        nakayama: [["1", "0", "0"], ["0", "beta/alpha", "0"], ["0", "0", "alpha/beta"]],
        erratum: None,
        derived: &[("a", Derived::CubeRoot("alpha")), ("b", Derived::CubeRoot("beta"))],
        table2: Some(Table2Row { params: &["alpha"], conditions: &[NonZero("alpha"), NotOne("alpha^3")], potential: "x*y*z + y*z*x + z*x*y - alpha*(x*z*y + z*y*x + y*x*z) + x*x*x" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - a*b^2*(x*z*y + z*y*x + y*x*z) + x*x*x",
            theta: [["1", "0", "0"], ["0", "b/a", "0"], ["0", "0", "a/b"]],
            g: [["b", "0", "0"], ["0", "b", "0"], ["0", "0", "a"]],
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::S2p,
        params: &[],
        conditions: &[],
        potential: "-z*x*y-y*x*z+x*y*y+y*y*x+x*z*z+z*z*x+x*x*x",
        relations: ["x*x+y*y+z*z", "y*x-x*z", "z*x-x*y"],
        nakayama: [["1", "0", "0"], ["0", "0", "-1"], ["0", "-1", "0"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y + (x*z*y + z*y*x + y*x*z) + x*x*x",
            theta: [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]],
            g: [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]],
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::T1,
        params: &["alpha", "beta", "gamma"],
        conditions: &[NonZero("alpha + beta + gamma")],
        potential: "beta*x*x*y+(alpha-beta+gamma)*x*y*x+(alpha-beta-gamma)*y*x*y-alpha*y*y*x-y*x*z+y*z*x+beta*y*x*x+x*y*z-x*z*y-alpha*x*y*y+z*x*y-z*y*x",
        relations: ["beta*x*y+(alpha-beta+gamma)*y*x+y*z-z*y-alpha*y*y", "(alpha-beta-gamma)*x*y-alpha*y*x-x*z+z*x+beta*x*x", "x*y-y*x"],
        nakayama: [["1", "0", "0"], ["0", "1", "0"], ["-alpha + 2*beta - gamma", "2*alpha - beta - gamma", "1"]],
        erratum: None,
        derived: &[("lam", Derived::Expr("(-alpha + 2*beta - gamma)/3")), ("mu", Derived::Expr("(2*alpha - beta - gamma)/3")), ("nu", Derived::Expr("(alpha + beta + gamma)/3"))],
        table2: Some(Table2Row { params: &[], conditions: &[], potential: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (x*x*y + x*y*x + y*x*x) - (y*y*x + y*x*y + x*y*y)" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (x*x*y + x*y*x + y*x*x) - (y*y*x + y*x*y + x*y*y)",
            theta: [["1", "0", "0"], ["0", "1", "0"], ["lam/nu", "mu/nu", "1"]],
            g: [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1/nu"]],
            c: "1/nu",
        },
    },
    CatalogRow {
        id: TypeId::T2,
        params: &["alpha", "beta", "gamma"],
        conditions: &[NonZero("alpha + beta + gamma")],
        potential: "gamma*x*x*x - beta*x*x*y + x*x*z + beta*x*y*y - x*z*y - alpha*y*x*x + alpha*y*y*x - gamma*y*y*y - y*y*z + y*z*x - z*x*x + z*y*y",
        relations: ["(1-beta-gamma)*x*x-y*y-x*z+z*y+beta*x*y", "-(alpha+2*gamma)*x*x+gamma*y*y-y*z+z*x+alpha*y*x", "x*x-y*y"],
        nakayama: [["0", "-1", "0"], ["-1", "0", "0"], ["-beta + gamma", "-alpha + gamma", "-1"]],
        erratum: Some("(1-beta-gamma)*x*x*x-(alpha+2*gamma)*y*x*x+z*x*x-x*y*y+gamma*y*y*y-z*y*y-x*x*z+x*z*y+beta*x*x*y-y*y*z+y*z*x+alpha*y*y*x"),
        derived: &[("lam", Derived::Expr("(-alpha + 2*beta - gamma)/3")), ("mu", Derived::Expr("(2*alpha - beta - gamma)/3")), ("nu", Derived::Expr("(alpha + beta + gamma)/3"))],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (x*x*y + x*y*x + y*x*x) - (y*y*x + y*x*y + x*y*y)",
            theta: [["0", "-1", "0"], ["-1", "0", "0"], ["-lam/nu", "-mu/nu", "-1"]],
            g: [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1/nu"]],
            c: "-1/nu",
        },
    },
    CatalogRow {
        id: TypeId::T3,
        params: &[],
        conditions: &[],
        potential: "-x*x*x+y*y*y+x*x*y+x*y*x+y*x*x-x*y*y-y*x*y-y*y*x+x*x*z+x*z*x+z*x*x+z*y*y+y*z*y+y*y*z-x*y*z-y*z*x-z*x*y",
        relations: ["-x*x+x*y+y*x-y*y+x*z+z*x-y*z", "y*y+x*x-x*y-y*x+z*y+y*z-z*x", "x*x+y*y-x*y"],
        nakayama: I3,
        erratum: None,
        derived: &[],
        table2: Some(Table2Row { params: &[], conditions: &[], potential: "x*y*z + y*z*x + z*x*y - (x*x*y + x*y*x + y*x*x) + (x*y*y + y*x*y + y*y*x) - (x*x*z + x*z*x + z*x*x) - (z*y*y + y*z*y + y*y*z) + x*x*x - y*y*y" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*x*y + x*y*x + y*x*x) + (x*y*y + y*x*y + y*y*x) - (x*x*z + x*z*x + z*x*x) - (z*y*y + y*z*y + y*y*z) + x*x*x - y*y*y",
            theta: I3,
            g: I3,
            c: "-1",
        },
    },
    CatalogRow {
        id: TypeId::Tp,
        params: &["alpha", "beta"],
        conditions: &[NonZero("alpha + 2*beta")],
        potential: "alpha*x*x*y-(alpha-2*beta)*x*y*x+(beta^2-alpha*beta)*x*y*y+x*y*z-x*z*y+alpha*y*x*x-y*x*z+y*z*x-alpha*y*z*y+alpha*beta^2*y*y*y-(beta^2-alpha*beta)*y*y*x-beta*y*y*z+z*x*y-z*y*x-beta*z*y*y",
        relations: ["alpha*x*y-(alpha-2*beta)*y*x+(beta^2-alpha*beta)*y*y+y*z-z*y", "alpha*x*x-x*z+z*x-alpha*z*y+alpha*beta^2*y*y-(beta^2-alpha*beta)*y*x-beta*y*z", "x*y-y*x-beta*y*y"],
        nakayama: [["1", "alpha - beta", "0"], ["0", "1", "0"], ["2*alpha - 2*beta", "(alpha - beta)^2", "1"]],
        erratum: None,
        derived: &[("lam", Derived::Expr("(alpha + 2*beta)/3")), ("mu", Derived::Expr("(alpha - beta)/3"))],
        table2: Some(Table2Row { params: &[], conditions: &[], potential: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (x*x*y + x*y*x + y*x*x) - (y*y*z + y*z*y + z*y*y) + y*y*y" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (x*x*y + x*y*x + y*x*x) - (y*y*z + y*z*y + z*y*y) + y*y*y",
            theta: [["1", "mu/lam", "0"], ["0", "1", "0"], ["2*mu/lam", "mu^2/lam^2", "1"]],
            g: [["1/lam", "0", "0"], ["0", "1", "0"], ["0", "0", "1/lam^2"]],
            c: "lam^-3",
        },
    },
    CatalogRow {
        id: TypeId::CC,
        params: &[],
        conditions: &[],
        potential: "-3*x*x*x-y*y*x-y*x*y-x*y*y+y*y*z+y*z*y+z*y*y-x*y*z-y*z*x-z*x*y+x*z*y+z*y*x+y*x*z",
        relations: ["-3*x*x-y*y-y*z+z*y", "-y*x-x*y+y*z+z*y-z*x+x*z", "y*y-x*y+y*x"],
        nakayama: I3,
        erratum: None,
        derived: &[],
        table2: Some(Table2Row { params: &[], conditions: &[], potential: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (y*y*x + y*x*y + x*y*y) - (y*y*z + y*z*y + z*y*y) + 3*x*x*x" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (y*y*x + y*x*y + x*y*y) - (y*y*z + y*z*y + z*y*y) + 3*x*x*x",
            theta: I3,
            g: I3,
            c: "-1",
        },
    },
    CatalogRow {
        id: TypeId::NC1,
        params: &["alpha"],
        conditions: &[NonZero("alpha"), NotOne("alpha^3")],
        potential: "(1-alpha^3)/alpha*x*x*x+(1-alpha^3)/alpha*y*y*y+x*y*z+y*z*x+z*x*y-alpha*(x*z*y+z*y*x+y*x*z)",
        relations: ["(1-alpha^3)/alpha*x*x+y*z-alpha*z*y", "(1-alpha^3)/alpha*y*y+z*x-alpha*x*z", "x*y-alpha*y*x"],
        nakayama: I3,
        erratum: None,
        derived: &[],
        table2: Some(Table2Row { params: &["alpha"], conditions: &[NonZero("alpha"), NotOne("alpha^3")], potential: "x*y*z + y*z*x + z*x*y - alpha*(x*z*y + z*y*x + y*x*z) + x*x*x + y*y*y" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - alpha*(x*z*y + z*y*x + y*x*z) + x*x*x + y*y*y",
            theta: I3,
            g: [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "alpha/(1 - alpha^3)"]],
            c: "alpha/(1 - alpha^3)",
        },
    },
    CatalogRow {
        id: TypeId::NC2,
        params: &[],
        conditions: &[],
        potential: "-2*x*y*x+x*x*z+z*x*x-2*y*x*y+y*y*z+z*y*y+y*z*x+x*z*y",
        relations: ["-2*y*x+x*z+z*y", "-2*x*y+y*z+z*x", "x*x+y*y"],
        nakayama: [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y + (x*z*y + z*y*x + y*x*z) + x*x*x + y*y*y",
            theta: [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
            g: [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-1/2"]],
            c: "-1/2",
        },
    },
    CatalogRow {
        id: TypeId::WL1,
        params: &["alpha", "gamma"],
        conditions: &[NonZero("alpha"), NotOne("alpha")],
        potential: "-(1+gamma)*y*y*x+alpha*(1+2*gamma)*y*x*y-alpha^2*(1+gamma)*x*y*y+alpha^2*x*y*z+y*z*x+alpha*z*x*y-alpha^2*x*z*y-z*y*x-alpha*y*x*z",
        relations: ["-alpha^2*(1+gamma)*y*y+alpha^2*y*z-alpha^2*z*y", "-(1+gamma)*y*x+alpha*(1+2*gamma)*x*y+z*x-alpha*x*z", "alpha*x*y-y*x"],
        nakayama: [["alpha^2", "0", "0"], ["0", "1/alpha", "0"], ["0", "(3*gamma + 2)/alpha", "1/alpha"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - 1/3*(y*y*x + y*x*y + x*y*y)",
            theta: [["alpha", "0", "0"], ["0", "1", "0"], ["0", "2/3 + gamma", "1"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::WL2,
        params: &["gamma"],
        conditions: &[],
        potential: "-(1+gamma)*y*y*x+(1+2*gamma)*y*x*y-(1+gamma)*x*y*y+x*y*z+y*z*x+z*x*y-x*z*y-z*y*x-y*x*z",
        relations: ["-(1+gamma)*y*y+y*z-z*y", "-(1+gamma)*y*x+(1+2*gamma)*x*y+z*x-x*z", "x*y-y*x"],
        nakayama: [["1", "0", "0"], ["0", "1", "0"], ["0", "3*gamma + 2", "1"]],
        erratum: None,
        derived: &[],
        table2: Some(Table2Row { params: &[], conditions: &[], potential: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - 1/3*(y*y*x + y*x*y + x*y*y)" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - 1/3*(y*y*x + y*x*y + x*y*y)",
            theta: [["1", "0", "0"], ["0", "1", "0"], ["0", "2/3 + gamma", "1"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::WL3,
        params: &["gamma"],
        conditions: &[],
        potential: "x*x*y-2*x*y*x+y*x*x-(1+gamma)*y*y*x+(1+2*gamma)*y*x*y-(1+gamma)*x*y*y+x*y*z+y*z*x+z*x*y-x*z*y-z*y*x-y*x*z",
        relations: ["x*y-2*y*x-(1+gamma)*y*y+y*z-z*y", "x*x-(1+gamma)*y*x+(1+2*gamma)*x*y+z*x-x*z", "x*y-y*x"],
        nakayama: [["1", "0", "0"], ["0", "1", "0"], ["3", "3*gamma + 2", "1"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - 1/3*(y*y*x + y*x*y + x*y*y)",
            theta: [["1", "0", "0"], ["0", "1", "0"], ["1", "2/3 + gamma", "1"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::TL1,
        params: &["alpha"],
        conditions: &[NonZero("alpha")],
        potential: "-z*x*y/alpha^2+z*y*x/alpha+alpha^2*y*x*z-alpha*y*z*x+x*z*y/alpha-alpha*x*y*z-x*x*x",
        relations: ["z*y/alpha-alpha*y*z-x*x", "alpha^2*x*z-alpha*z*x", "-x*y/alpha^2+y*x/alpha"],
        nakayama: [["1", "0", "0"], ["0", "alpha^3", "0"], ["0", "0", "alpha^-3"]],
        erratum: None,
        derived: &[],
        table2: Some(Table2Row { params: &["alpha"], conditions: &[EqualsOne("alpha^3")], potential: "x*y*z + y*z*x + z*x*y - alpha*(x*z*y + z*y*x + y*x*z) - x*x*x" }),
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - x*x*x",
            theta: [["1", "0", "0"], ["0", "alpha", "0"], ["0", "0", "1/alpha"]],
            g: [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-1"]],
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::TL2,
        params: &["beta"],
        conditions: &[],
        potential: "beta*x*x*y+beta*x*y*x+(-beta^2-1)*x*x*x+2*y*x*y-y*y*x-2*beta*y*x*x+z*x*y-z*y*x-beta*z*x*x-beta*x*x*z+2*beta*x*z*x-y*x*z+y*z*x-x*z*y+x*y*z-x*y*y",
        relations: ["beta*x*y+beta*y*x+(-beta^2-1)*x*x-beta*x*z+2*beta*z*x-z*y+y*z-y*y", "2*x*y-y*x-2*beta*x*x-x*z+z*x", "x*y-y*x-beta*x*x"],
        nakayama: [["1", "0", "0"], ["3*beta", "1", "0"], ["3*beta", "3", "1"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - x*x*x",
            theta: [["1", "0", "0"], ["beta", "1", "0"], ["0", "1", "1"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::TL3,
        params: &[],
        conditions: &[],
        potential: "-2*y*x*y-y*y*x+z*x*y+z*y*x-y*x*z-y*z*x+x*z*y-x*y*z-x*x*x-x*y*y",
        relations: ["z*y-y*z-x*x-y*y", "-2*x*y-y*x-x*z-z*x", "x*y+y*x"],
        nakayama: [["1", "0", "0"], ["0", "-1", "0"], ["0", "3", "-1"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - x*x*x",
            theta: [["1", "0", "0"], ["0", "-1", "0"], ["0", "1", "-1"]],
            g: I3,
            c: "1",
        },
    },
    CatalogRow {
        id: TypeId::TL4,
        params: &[],
        conditions: &[],
        potential: "-x*x*x+y*x*x+x*x*y-2*x*y*x+z*x*y+x*y*z+y*z*x-z*y*x-y*x*z-x*z*y",
        relations: ["-x*x+x*y-2*y*x+y*z-z*y", "x*x+z*x-x*z", "x*y-y*x"],
        nakayama: [["1", "0", "0"], ["0", "1", "0"], ["3", "0", "1"]],
        erratum: None,
        derived: &[],
        table2: None,
        table3: Table3Row {
            w0: "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) - x*x*x",
            theta: [["1", "0", "0"], ["0", "1", "0"], ["1", "0", "1"]],
            g: I3,
            c: "1",
        },
    },
];
