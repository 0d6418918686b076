'''
Exceptions raised by ofdmatools. Every class derives from the builtin exception that callers
would otherwise have to catch, so `except ValueError` keeps working.
'''


class ConfigurationError(ValueError):
    ''' Invalid topology or scenario parameters '''


class DomainError(ValueError):
    ''' A closed-form expression was evaluated outside of its domain '''


class ContractError(RuntimeError):
    ''' A precondition that the calling algorithm guarantees did not hold '''


class OracleLimitError(RuntimeError):
    ''' The exact solver refused a graph larger than its vertex cap '''


class FeasibilityError(RuntimeError):
    ''' An allocation violates one or more of the per-cell constraints '''

    def __init__(self, violations):
        self.violations = list(violations)
        RuntimeError.__init__(self, 'Infeasible allocation: ' + '; '.join(self.violations))
