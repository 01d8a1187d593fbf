"""
Observer for run lifecycle events.
Subscriptions are (event_name -> list of callables); dispatch is thread-safe.
"""
from threading import Lock
from typing import Any, Callable, Dict, List
import logging

logger = logging.getLogger(__name__)

RUN_STARTED = "run_started"
SWEEP_POINT = "sweep_point"
RUN_COMPLETED = "run_completed"


class EventDispatcher:
    def __init__(self):
        self._listeners: Dict[str, List[Callable[..., None]]] = {}
        self._lock = Lock()

    def subscribe(self, event_name: str, callback: Callable[..., None]) -> None:
        with self._lock:
            self._listeners.setdefault(event_name, []).append(callback)

    def unsubscribe(self, event_name: str, callback: Callable[..., None]) -> None:
        with self._lock:
            if event_name in self._listeners:
                try:
                    self._listeners[event_name].remove(callback)
                except ValueError:
                    pass

    def dispatch(self, event_name: str, *args: Any, **kwargs: Any) -> None:
        with self._lock:
            listeners = list(self._listeners.get(event_name, []))
        for listener in listeners:
            try:
                listener(*args, **kwargs)
            except Exception:
                # a failing listener never aborts the run
                logger.exception("Listener for %s failed", event_name)


def log_listener(event_name: str) -> Callable[..., None]:
    """Listener that writes every payload of `event_name` to the log at INFO."""
    def _log(**payload: Any) -> None:
        logger.info("%s %s", event_name, ", ".join(f"{key}={payload[key]}" for key in sorted(payload)))
    return _log


def attach_logging(dispatcher: EventDispatcher) -> None:
    for name in (RUN_STARTED, SWEEP_POINT, RUN_COMPLETED):
        dispatcher.subscribe(name, log_listener(name))
