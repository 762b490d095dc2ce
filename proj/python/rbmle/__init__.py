"""Reward-biased MLE contextual bandit policies and benchmark harness."""

from ._rbmle import *  # noqa: F401,F403
from ._rbmle import __doc__  # noqa: F401
