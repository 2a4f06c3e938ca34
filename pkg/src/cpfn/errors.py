class BudgetExceededError(Exception):
    """Raised when an exhaustive sweep or enumeration would visit more
    objects than the caller allowed."""

    def __init__(self, needed: int, budget: int, what: str = "tables"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{needed} {what} exceed the budget of {budget}")
