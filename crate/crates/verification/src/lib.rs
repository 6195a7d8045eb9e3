//! Home of the `acceptance` test target, which runs the full verification
//! suite of `polar-core`. Kept in its own package so it runs after the other
//! test suites of the workspace.
