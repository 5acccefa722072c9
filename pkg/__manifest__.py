{
    "name": "Supertensor",
    "version": "1.0.0",
    "category": "Mathematics",
    "summary": "Non-abelian tensor and exterior squares of nilpotent Lie superalgebras",
    "description": """
        Supertensor
        ===========
        Constructive ⊗², ∧², □, Γ, Z^∧, Schur multipliers and ⊗³ of
        class-2 nilpotent Lie superalgebras over ℚ, with a verification
        sweep against the closed-form dimension formulas.
    """,
    "license": "MIT",
    "external_dependencies": {
        "python": ["sympy", "numpy", "click", "pyparsing", "jinja2", "yaml"],
    },
    "installable": True,
}
