"""Training engine: episodes, runs, benchmarks and throughput"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Protocol, runtime_checkable
from src.agents import AgentConfig, Algorithm, TDAgent, make_agent, make_rng
from src.environment import ACTIONS, Action, DiscreteState, EnvConfig, Registry, StepResult, make
from src.vehicle import RobotPose
from .models import EpisodeRecord, RunLog, ThroughputReport

log = logging.getLogger("Harness")


@runtime_checkable
class EpisodicEnv(Protocol):
    """What the training loop needs from an environment"""

    def reset(self) -> DiscreteState: ...

    def step(self, action: Action) -> StepResult: ...


@runtime_checkable
class SimulatedEnv(EpisodicEnv, Protocol):
    """Episodic environment that also exposes its robot pose and settings"""

    cfg: EnvConfig

    @property
    def pose(self) -> RobotPose: ...


def run_episode(env: EpisodicEnv, agent: TDAgent, max_steps: int, index: int = 0) -> EpisodeRecord:
    """Run one episode from reset until a crash or `max_steps`, learning every step.

    Q-Learning learns from each transition as soon as it happens. Sarsa first
    picks the next action, learns with it, then executes that same action.
    Actions are drawn with the agent's own generator and exploration rate.

    Args:
        env (EpisodicEnv): Environment, reset at the start
        agent (TDAgent): Learner, updated in place
        max_steps (int): Step cap, at least 1
        index (int, optional): Episode number stored in the record. Defaults to 0.

    Returns:
        EpisodeRecord: Steps taken, summed reward, exploration rate and crash flag
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")

    epsilon = agent.epsilon
    state = env.reset()
    action = agent.choose_action(state)
    total = 0.0
    crashed = False
    steps = 0

    for steps in range(1, max_steps + 1):
        observation, reward, done = env.step(action)
        total += reward

        match agent.algorithm:
            case Algorithm.SARSA:
                next_action = None if done else agent.choose_action(observation)
                agent.learn(state, action, reward, observation, next_action, done)
            case Algorithm.QLEARNING:
                agent.learn(state, action, reward, observation, done)
                next_action = None if done else agent.choose_action(observation)

        if done:
            crashed = True
            break
        state, action = observation, next_action

    return EpisodeRecord(index=index, steps=steps, cumulative_reward=total, epsilon=epsilon, crashed=crashed)


def train(
    env_id: str,
    algorithm: Algorithm | str,
    cfg: AgentConfig,
    episodes: int,
    max_steps: int,
    seed: int,
    registry: Registry = None,
    env_overrides: dict = None,
) -> RunLog:
    """Train a fresh agent for `episodes` episodes, decaying epsilon after each one.

    Raises:
        UnknownEnvironment: env_id is not registered
        UnknownAlgorithm: algorithm is not supported

    Returns:
        RunLog: One record per episode, the learned table attached as `qtable`
    """
    if episodes < 1:
        raise ValueError(f"episodes must be >= 1, got {episodes}")

    env = make(env_id, registry, **(env_overrides or {}))
    agent = make_agent(algorithm, cfg, seed)
    log.info("Training %s on %s for %s episodes (seed %s)", agent, env_id, episodes, seed)

    started = time.perf_counter()
    records = []
    for i in range(episodes):
        record = run_episode(env, agent, max_steps, index=i)
        records.append(record)
        log.debug(
            "Episode %s: steps=%s reward=%s epsilon=%.4f crashed=%s",
            i,
            record.steps,
            record.cumulative_reward,
            record.epsilon,
            record.crashed,
        )
        agent.end_episode()

    log.info("Finished %s on %s seed %s in %.1f s", agent.algorithm.value, env_id, seed, time.perf_counter() - started)
    return RunLog(
        env_id=env_id,
        algorithm=agent.algorithm,
        config=cfg,
        seed=seed,
        episodes=records,
        max_steps=max_steps,
        qtable=agent.q,
    )


def _train_job(job: tuple) -> tuple[Algorithm, int, RunLog]:
    env_id, algorithm, cfg, episodes, max_steps, seed, registry, env_overrides = job
    run = train(env_id, algorithm, cfg, episodes, max_steps, seed, registry, env_overrides)
    return algorithm, seed, run


def benchmark(
    env_id: str,
    cfg: AgentConfig,
    episodes: int,
    max_steps: int,
    seeds: list[int],
    jobs: int = 1,
    registry: Registry = None,
    env_overrides: dict = None,
) -> dict[tuple[Algorithm, int], RunLog]:
    """Train every algorithm once per seed.

    Runs are independent, so `jobs` > 1 spreads them over worker processes
    without changing any result.

    Returns:
        dict[tuple[Algorithm, int], RunLog]: Runs keyed by (algorithm, seed)
    """
    work = [
        (env_id, algorithm, cfg, episodes, max_steps, seed, registry, env_overrides)
        for algorithm in Algorithm
        for seed in seeds
    ]
    log.info("Benchmarking %s runs on %s with %s job(s)", len(work), env_id, jobs)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_train_job, work))
    else:
        results = [_train_job(job) for job in work]

    return {(algorithm, seed): run for algorithm, seed, run in results}


def rollout(env: SimulatedEnv, agent: TDAgent, max_steps: int = 1500) -> list[RobotPose]:
    """Poses visited by the greedy policy from reset until a crash or `max_steps`"""
    state = env.reset()
    poses = [env.pose]
    for _ in range(max_steps):
        result = env.step(agent.greedy_action(state))
        poses.append(env.pose)
        if result.done:
            break
        state = result.observation
    return poses


def measure_throughput(env: SimulatedEnv, steps: int = 1_000_000, seed: int = 0) -> ThroughputReport:
    """Time headless stepping with uniformly random actions, resetting after crashes"""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")

    picks = make_rng(seed).integers(len(ACTIONS), size=steps).tolist()
    actions = [ACTIONS[i] for i in picks]

    episodes = 1
    env.reset()
    started = time.perf_counter()
    for action in actions:
        if env.step(action).done:
            env.reset()
            episodes += 1
    elapsed = time.perf_counter() - started

    report = ThroughputReport(steps=steps, seconds=elapsed, episodes=episodes, action_duration=env.cfg.action_duration)
    log.info("Throughput on %s: %s", env, report)
    return report
