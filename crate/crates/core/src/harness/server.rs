//! The play server. [`PlayServer::handle`] is a pure request handler over
//! the session table; [`spawn_server`] puts it behind HTTP.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;

use serde::{Deserialize, Serialize};

use super::commands::builtin;
use super::HarnessError;
use crate::games::{Adjudication, GameSession, Oracle, ProtocolError, SessionCreate, State, Status};
use crate::strategies::{Limits, Play, Strategy, Verdict};
use crate::syntax::{parse_sentence, Labmove, Player};

enum Entry {
    /// Both sides are moved by clients.
    Manual(GameSession),
    /// The machine side is played by a strategy.
    Machine(Box<Play>),
}

impl Entry {
    fn session(&self) -> &GameSession {
        match self {
            Entry::Manual(s) => s,
            Entry::Machine(p) => &p.session,
        }
    }

    fn verdict(&self) -> Option<Verdict> {
        match self {
            Entry::Manual(_) => None,
            Entry::Machine(p) => p.verdict().cloned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: u64,
    pub state: State,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionSummary {
    pub id: u64,
    pub formula: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjudicateResponse {
    #[serde(flatten)]
    pub adjudication: Adjudication,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub status: u16,
    pub body: String,
}

impl Response {
    fn json(status: u16, v: &impl Serialize) -> Response {
        Response { status, body: serde_json::to_string(v).expect("responses serialize") }
    }

    fn error(status: u16, kind: &str, error: impl Into<String>) -> Response {
        Response::json(status, &ProtocolError { error: error.into(), kind: kind.into() })
    }
}

#[derive(Default)]
pub struct PlayServer {
    sessions: Mutex<BTreeMap<u64, Arc<Mutex<Entry>>>>,
    next: AtomicU64,
    limits: Limits,
}

impl PlayServer {
    pub fn new(limits: Limits) -> Self {
        PlayServer { sessions: Mutex::default(), next: AtomicU64::new(0), limits }
    }

    fn entry(&self, id: u64) -> Option<Arc<Mutex<Entry>>> {
        self.sessions.lock().expect("session table").get(&id).cloned()
    }

    fn view(id: u64, e: &Entry) -> SessionView {
        SessionView { id, state: State::of(e.session()), verdict: e.verdict() }
    }

    /// Answers one request. Paths:
    /// `POST /sessions`, `GET /sessions`, `GET|DELETE /sessions/{id}`,
    /// `POST /sessions/{id}/move`, `POST /sessions/{id}/adjudicate`.
    pub fn handle(&self, method: &str, path: &str, body: &str) -> Response {
        let parts: Vec<&str> = path.trim_matches('/').split('/').collect();
        let id = || parts.get(1).and_then(|s| s.parse::<u64>().ok());
        match (method, parts.as_slice()) {
            ("POST", ["sessions"]) => self.create(body),
            ("GET", ["sessions"]) => self.list(),
            (_, ["sessions", _, ..]) if id().is_none() => Response::error(404, "not_found", "no such session"),
            ("GET", ["sessions", _]) => self.with(id().unwrap(), |id, e| Response::json(200, &Self::view(id, e))),
            ("DELETE", ["sessions", _]) => {
                let id = id().unwrap();
                match self.sessions.lock().expect("session table").remove(&id) {
                    Some(_) => Response::json(200, &serde_json::json!({ "closed": id })),
                    None => Response::error(404, "not_found", format!("no session {id}")),
                }
            }
            ("POST", ["sessions", _, "move"]) => self.apply(id().unwrap(), body),
            ("POST", ["sessions", _, "adjudicate"]) => self.with(id().unwrap(), |_, e| {
                let adjudication = match e {
                    Entry::Manual(s) => s.adjudicate(),
                    Entry::Machine(p) => {
                        p.finish();
                        p.session.adjudicate()
                    }
                };
                Response::json(200, &AdjudicateResponse { adjudication, verdict: e.verdict() })
            }),
            _ => Response::error(404, "not_found", format!("no route for {method} {path}")),
        }
    }

    fn with(&self, id: u64, f: impl FnOnce(u64, &mut Entry) -> Response) -> Response {
        match self.entry(id) {
            Some(e) => f(id, &mut e.lock().expect("session lock")),
            None => Response::error(404, "not_found", format!("no session {id}")),
        }
    }

    fn list(&self) -> Response {
        let table: Vec<(u64, Arc<Mutex<Entry>>)> =
            self.sessions.lock().expect("session table").iter().map(|(k, v)| (*k, v.clone())).collect();
        let list: Vec<SessionSummary> = table
            .into_iter()
            .map(|(id, e)| {
                let e = e.lock().expect("session lock");
                SessionSummary { id, formula: e.session().root.to_string(), status: e.session().status.clone() }
            })
            .collect();
        Response::json(200, &list)
    }

    fn create(&self, body: &str) -> Response {
        let req: SessionCreate = match serde_json::from_str(body) {
            Ok(r) => r,
            Err(e) => return Response::error(400, "bad_request", e.to_string()),
        };
        let formula = match parse_sentence(&req.formula) {
            Ok(f) => f,
            Err(e) => return Response::error(400, "syntax", e.to_string()),
        };
        let entry = match req.strategy {
            None => match GameSession::new(formula, req.bound) {
                Ok(s) => Entry::Manual(s),
                Err(e) => return Response::error(400, "game", e.to_string()),
            },
            Some(requested) => {
                let strategy = match requested {
                    serde_json::Value::String(name) => match builtin(&name) {
                        Some((s, _)) => s,
                        None => return Response::error(400, "strategy", format!("no builtin strategy {name}")),
                    },
                    other => match serde_json::from_value::<Strategy>(other) {
                        Ok(s) => s,
                        Err(e) => return Response::error(400, "strategy", e.to_string()),
                    },
                };
                match strategy.game() {
                    Ok(g) if g.same_game(&formula) => {}
                    Ok(g) => return Response::error(400, "shape_mismatch", format!("strategy plays {g}, not {formula}")),
                    Err(e) => return Response::error(400, "strategy", e.to_string()),
                }
                let mut play = match Play::new(&strategy, formula, &Oracle::new(req.bound)) {
                    Ok(p) => p,
                    Err(e) => return Response::error(400, "strategy", e.to_string()),
                };
                let _ = play.run_until_quiescent(&self.limits);
                Entry::Machine(Box::new(play))
            }
        };
        let id = self.next.fetch_add(1, Ordering::SeqCst);
        let view = Self::view(id, &entry);
        self.sessions.lock().expect("session table").insert(id, Arc::new(Mutex::new(entry)));
        Response::json(201, &view)
    }

    fn apply(&self, id: u64, body: &str) -> Response {
        let mv: Labmove = match serde_json::from_str(body) {
            Ok(m) => m,
            Err(e) => return Response::error(400, "bad_request", e.to_string()),
        };
        let limits = self.limits;
        self.with(id, |id, e| {
            let checked = match e {
                Entry::Machine(_) if mv.player != Player::Environment => {
                    return Response::error(409, "illegal_move", "the machine side of this session is played by its strategy")
                }
                Entry::Machine(p) if p.verdict().is_some() => {
                    return Response::error(409, "closed", "the play has ended")
                }
                _ => e.session().check_move(&mv),
            };
            if let Err(err) = checked {
                return Response::error(409, "illegal_move", err.to_string());
            }
            match e {
                Entry::Manual(s) => s.apply_move(mv).expect("checked above"),
                Entry::Machine(p) => {
                    if p.env_move(mv).is_ok() {
                        let _ = p.run_until_quiescent(&limits);
                    }
                }
            }
            Response::json(200, &Self::view(id, e))
        })
    }
}

pub struct ServerHandle {
    pub addr: SocketAddr,
    http: Arc<tiny_http::Server>,
    workers: Vec<JoinHandle<()>>,
}

impl ServerHandle {
    /// Blocks until the server stops.
    pub fn join(self) {
        for w in self.workers {
            let _ = w.join();
        }
    }

    pub fn shutdown(self) {
        self.http.unblock();
        for _ in 1..self.workers.len() {
            self.http.unblock();
        }
        self.join();
    }
}

/// Serves `server` on `port` (0 picks a free one) with a few worker threads.
pub fn spawn_server(server: Arc<PlayServer>, port: u16, workers: usize) -> Result<ServerHandle, HarnessError> {
    let http = Arc::new(tiny_http::Server::http(("127.0.0.1", port)).map_err(|e| HarnessError::Io(e.to_string()))?);
    let addr = http.server_addr().to_ip().ok_or_else(|| HarnessError::Io("not an IP listener".into()))?;
    let workers = (0..workers.max(1))
        .map(|_| {
            let http = http.clone();
            let server = server.clone();
            std::thread::spawn(move || {
                while let Ok(mut rq) = http.recv() {
                    let mut body = String::new();
                    let resp = match rq.as_reader().read_to_string(&mut body) {
                        _ if *rq.method() == tiny_http::Method::Options => Response { status: 204, body: String::new() },
                        Ok(_) => server.handle(rq.method().as_str(), rq.url(), &body),
                        Err(e) => Response::error(400, "bad_request", e.to_string()),
                    };
                    let out = tiny_http::Response::from_string(resp.body)
                        .with_status_code(resp.status)
                        .with_header(header("Content-Type", "application/json"))
                        .with_header(header("Access-Control-Allow-Origin", "*"))
                        .with_header(header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"))
                        .with_header(header("Access-Control-Allow-Headers", "Content-Type"));
                    let _ = rq.respond(out);
                }
            })
        })
        .collect();
    Ok(ServerHandle { addr, http, workers })
}

fn header(k: &str, v: &str) -> tiny_http::Header {
    tiny_http::Header::from_bytes(k.as_bytes(), v.as_bytes()).expect("static header")
}
