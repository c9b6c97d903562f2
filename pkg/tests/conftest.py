import pytest

from batchfront.model import Instance, Job, Lateness


@pytest.fixture
def two_jobs():
    """n=2, s=2, b=2, p=(1,3), lateness dues (3,20).

    All three feasible schedules, brute force:
      {1,2}      -> C=6, costs (3, -14)  -> (6, 3)
      {1};{2}    -> C=3,8, costs (0,-12) -> (8, 0)
      {2};{1}    -> C=5,8, costs (-15,5) -> (8, 5)
    Frontier {(6,3), (8,0)}.
    """
    return Instance(
        jobs=(Job(1, 1, Lateness(3)), Job(2, 3, Lateness(20))),
        setup=2,
        capacity=2,
    )


@pytest.fixture
def three_jobs():
    """n=3, s=2, b=2, p=(3,1,2), lateness dues (5,6,10); frontier {(10,1)}.

    Every two-batch split has makespan 10; {1,2};{3} alone reaches max cost
    1, and all three-batch schedules land at makespan 12 with max cost >= 2.
    """
    return Instance(
        jobs=(Job(1, 3, Lateness(5)), Job(2, 1, Lateness(6)), Job(3, 2, Lateness(10))),
        setup=2,
        capacity=2,
    )


@pytest.fixture
def fork():
    """n=3 unbounded, s=1, p=(2,1,1), dues (3,10,10), edges 1->2 and 1->3.

    Job 1 must finish before jobs 2 and 3 start; frontier {(6,0)} via
    {1};{2,3} with completions 3 and 6.
    """
    return Instance(
        jobs=(Job(1, 2, Lateness(3)), Job(2, 1, Lateness(10)), Job(3, 1, Lateness(10))),
        setup=1,
        capacity=None,
        precedence=((1, 2), (1, 3)),
    )
